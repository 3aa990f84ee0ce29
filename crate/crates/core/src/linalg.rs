//! Dense complex matrix kernel for dimensions 2, 4 and 8.
//!
//! Everything downstream works on one fixed index convention:
//! a three-qubit basis ket `|i_A j_B k_C>` has row index `4i + 2j + k`,
//! a two-qubit ket `|m_X n_Y>` has row index `2m + n`, row-major storage
//! throughout. All index formulas in this crate transcribe literally under
//! that convention.

use num_complex::Complex64;

use crate::error::Error;

/// Entrywise Hermitian-symmetry tolerance for accepting input matrices.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Tolerance on |trace - 1| for density-matrix validation.
pub const TRACE_TOL: f64 = 1e-10;
/// Positive-semidefiniteness tolerance: eigenvalues above `-PSD_TOL` count
/// as non-negative.
pub const PSD_TOL: f64 = 1e-10;

/// Off-diagonal Frobenius-norm threshold at which the Jacobi sweep stops.
const JACOBI_OFFDIAG_TOL: f64 = 1e-14;
/// Hard cap on Jacobi sweeps; convergence is quadratic and in practice a
/// handful of sweeps suffice for dimension 8.
const JACOBI_MAX_SWEEPS: usize = 100;

/// Row index of `|i_A j_B k_C>` in the 8-dimensional basis.
#[inline]
pub fn triple_index(i: usize, j: usize, k: usize) -> usize {
    4 * i + 2 * j + k
}

/// Row index of `|m_X n_Y>` in the 4-dimensional basis.
#[inline]
pub fn pair_index(m: usize, n: usize) -> usize {
    2 * m + n
}

/// Dense complex square matrix of dimension 2, 4 or 8, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl SquareMatrix {
    fn check_dim(dim: usize) {
        assert!(
            dim == 2 || dim == 4 || dim == 8,
            "supported dimensions are 2, 4 and 8, got {dim}"
        );
    }

    pub fn zeros(dim: usize) -> Self {
        Self::check_dim(dim);
        SquareMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Builds a matrix from `dim * dim` row-major entries. Rejects
    /// unsupported dimensions, mismatched entry counts and non-finite
    /// values; stored matrices are finite by construction.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self, Error> {
        if dim != 2 && dim != 4 && dim != 8 {
            return Err(Error::InvalidInput(format!(
                "supported dimensions are 2, 4 and 8, got {dim}"
            )));
        }
        if entries.len() != dim * dim {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if let Some(z) = entries.iter().find(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite entry {z}")));
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: f64) -> SquareMatrix {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = SquareMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> SquareMatrix {
        let n = self.dim;
        let mut out = SquareMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, self.get(c, r).conj());
            }
        }
        out
    }

    /// Largest entrywise deviation from Hermitian symmetry,
    /// `max_ij |M[i][j] - conj(M[j][i])|`.
    pub fn hermiticity_error(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for r in 0..n {
            for c in r..n {
                let d = (self.get(r, c) - self.get(c, r).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// `(M + M^dagger) / 2`. Leaves an exactly Hermitian matrix unchanged
    /// bit for bit.
    pub fn symmetrized(&self) -> SquareMatrix {
        let n = self.dim;
        let mut out = SquareMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, (self.get(r, c) + self.get(c, r).conj()) * 0.5);
            }
        }
        out
    }

    /// Largest entrywise absolute difference against `other`.
    pub fn max_abs_diff(&self, other: &SquareMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Transpose on the second tensor factor of a 4x4 bipartite matrix:
    /// `out[2m+n][2r+s] = in[2m+s][2r+n]`. An exact involution.
    pub fn partial_transpose_second(&self) -> SquareMatrix {
        assert_eq!(self.dim, 4, "partial transpose acts on 4x4 matrices");
        let mut out = SquareMatrix::zeros(4);
        for m in 0..2 {
            for n in 0..2 {
                for r in 0..2 {
                    for s in 0..2 {
                        out.set(pair_index(m, n), pair_index(r, s), self.get(pair_index(m, s), pair_index(r, n)));
                    }
                }
            }
        }
        out
    }
}

/// Kronecker product of two 2x2 matrices:
/// `out[2m+n][2r+s] = X[m][r] * Y[n][s]`.
pub fn kron(x: &SquareMatrix, y: &SquareMatrix) -> SquareMatrix {
    assert_eq!(x.dim(), 2, "kron expects 2x2 factors");
    assert_eq!(y.dim(), 2, "kron expects 2x2 factors");
    let mut out = SquareMatrix::zeros(4);
    for m in 0..2 {
        for n in 0..2 {
            for r in 0..2 {
                for s in 0..2 {
                    out.set(pair_index(m, n), pair_index(r, s), x.get(m, r) * y.get(n, s));
                }
            }
        }
    }
    out
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The input must be Hermitian within [`HERMITICITY_TOL`] entrywise; it is
/// symmetrized before the solve so that rounding in the caller cannot leak
/// spurious imaginary components into the spectrum. Cyclic Jacobi rotations,
/// run until the off-diagonal Frobenius norm drops below 1e-14.
pub fn hermitian_eigenvalues(m: &SquareMatrix) -> Result<Vec<f64>, Error> {
    let dev = m.hermiticity_error();
    if dev > HERMITICITY_TOL {
        return Err(Error::NonHermitian { max_deviation: dev });
    }
    Ok(jacobi_eigenvalues(m.symmetrized()))
}

fn offdiag_frobenius(a: &SquareMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                acc += a.get(r, c).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic complex Jacobi on an (exactly) Hermitian matrix.
fn jacobi_eigenvalues(mut a: SquareMatrix) -> Vec<f64> {
    let n = a.dim();
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        if offdiag_frobenius(&a) <= JACOBI_OFFDIAG_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let g = a.get(p, q);
                let abs_g = g.norm();
                if abs_g == 0.0 {
                    continue;
                }
                // Unitary plane rotation zeroing a[p][q]: with
                // g = |g| e^{i phi}, alpha = a[p][p], beta = a[q][q],
                // choose tan(theta) = t from t^2 + 2 tau t - 1 = 0,
                // tau = (alpha - beta) / (2|g|), taking the small root.
                let phase = g / abs_g;
                let alpha = a.get(p, p).re;
                let beta = a.get(q, q).re;
                let tau = (alpha - beta) / (2.0 * abs_g);
                let root = (1.0 + tau * tau).sqrt();
                let t = if tau >= 0.0 { 1.0 / (tau + root) } else { 1.0 / (tau - root) };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // A <- U^dagger A U with U = I except
                // U[p][p] = c, U[p][q] = -s e^{i phi},
                // U[q][p] = s e^{-i phi}, U[q][q] = c.
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, akp * c + akq * s * phase.conj());
                    a.set(k, q, akq * c - akp * s * phase);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, apk * c + aqk * s * phase);
                    a.set(q, k, aqk * c - apk * s * phase.conj());
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eigs
}

/// Outcome of density-matrix validation: which checks were run and by how
/// much each property deviates.
#[derive(Debug, Clone)]
pub struct DensityCheck {
    pub dim: usize,
    pub tol: f64,
    /// Max entrywise deviation from Hermitian symmetry.
    pub hermiticity_error: f64,
    /// |trace - 1|.
    pub trace_error: f64,
    /// Smallest eigenvalue of the symmetrized matrix.
    pub min_eigenvalue: f64,
}

impl DensityCheck {
    pub fn passed(&self) -> bool {
        self.hermiticity_error <= self.tol
            && self.trace_error <= self.tol
            && self.min_eigenvalue >= -self.tol
    }

    /// Human-readable description of the first failing check, if any.
    pub fn failure(&self) -> Option<String> {
        if self.hermiticity_error > self.tol {
            Some(format!(
                "hermiticity deviation {:.3e} exceeds {:.0e}",
                self.hermiticity_error, self.tol
            ))
        } else if self.trace_error > self.tol {
            Some(format!(
                "trace deviates from 1 by {:.3e} (tolerance {:.0e})",
                self.trace_error, self.tol
            ))
        } else if self.min_eigenvalue < -self.tol {
            Some(format!(
                "minimum eigenvalue {:.3e} below -{:.0e}",
                self.min_eigenvalue, self.tol
            ))
        } else {
            None
        }
    }
}

impl std::fmt::Display for DensityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.failure() {
            Some(why) => write!(f, "{}x{} matrix: {why}", self.dim, self.dim),
            None => write!(f, "{}x{} matrix: valid density matrix", self.dim, self.dim),
        }
    }
}

/// Validates a candidate density matrix: Hermitian within `tol`, trace
/// within `tol` of 1, minimum eigenvalue at least `-tol`. Never fails;
/// the returned diagnostics say what deviated and by how much.
pub fn is_density_matrix(m: &SquareMatrix, tol: f64) -> DensityCheck {
    let hermiticity_error = m.hermiticity_error();
    let trace_error = (m.trace() - Complex64::new(1.0, 0.0)).norm();
    let min_eigenvalue = jacobi_eigenvalues(m.symmetrized())[0];
    DensityCheck {
        dim: m.dim(),
        tol,
        hermiticity_error,
        trace_error,
        min_eigenvalue,
    }
}

fn validate_density(
    m: SquareMatrix,
    expected_dim: usize,
    herm_tol: f64,
    rest_tol: f64,
) -> Result<SquareMatrix, Error> {
    if m.dim() != expected_dim {
        return Err(Error::InvalidInput(format!(
            "expected a {expected_dim}x{expected_dim} matrix, got {}x{}",
            m.dim(),
            m.dim()
        )));
    }
    let mut check = is_density_matrix(&m, rest_tol);
    if check.hermiticity_error > herm_tol {
        check.tol = herm_tol;
        return Err(Error::NotDensityMatrix(check));
    }
    if check.trace_error > rest_tol || check.min_eigenvalue < -rest_tol {
        return Err(Error::NotDensityMatrix(check));
    }
    Ok(m.symmetrized())
}

/// Validated 4x4 density matrix in the `2m + n` basis: one of the six
/// bipartite reductions, or any two-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4 {
    mat: SquareMatrix,
}

impl DensityMatrix4 {
    /// Validates with the crate-wide tolerances (Hermitian within 1e-12,
    /// trace within 1e-10 of 1, eigenvalues above -1e-10) and stores the
    /// symmetrized matrix.
    pub fn new(m: SquareMatrix) -> Result<Self, Error> {
        Ok(DensityMatrix4 {
            mat: validate_density(m, 4, HERMITICITY_TOL, PSD_TOL)?,
        })
    }

    /// Like [`DensityMatrix4::new`] but with every check relaxed to `tol`
    /// when `tol` is looser than the defaults. Used when accepting
    /// hand-written matrix files.
    pub fn with_tolerance(m: SquareMatrix, tol: f64) -> Result<Self, Error> {
        Ok(DensityMatrix4 {
            mat: validate_density(m, 4, tol.max(HERMITICITY_TOL), tol.max(PSD_TOL))?,
        })
    }

    /// For outputs that are density matrices by construction (reductions of
    /// validated states, normalized rank-1 projectors).
    pub(crate) fn trusted(mat: SquareMatrix) -> Self {
        debug_assert!(is_density_matrix(&mat, 1e-8).passed());
        DensityMatrix4 { mat }
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.mat
    }
}

/// Validated 8x8 density matrix of a three-qubit system, row index
/// `4i + 2j + k` for `|i_A j_B k_C>`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix8 {
    mat: SquareMatrix,
}

impl DensityMatrix8 {
    pub fn new(m: SquareMatrix) -> Result<Self, Error> {
        Ok(DensityMatrix8 {
            mat: validate_density(m, 8, HERMITICITY_TOL, PSD_TOL)?,
        })
    }

    pub fn with_tolerance(m: SquareMatrix, tol: f64) -> Result<Self, Error> {
        Ok(DensityMatrix8 {
            mat: validate_density(m, 8, tol.max(HERMITICITY_TOL), tol.max(PSD_TOL))?,
        })
    }

    pub(crate) fn trusted(mat: SquareMatrix) -> Self {
        debug_assert!(is_density_matrix(&mat, 1e-8).passed());
        DensityMatrix8 { mat }
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.mat
    }
}

/// Which subsystem a partial trace removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
    C,
}

/// Ordinary reduction by tracing out one subsystem. Tracing C:
/// `out[2i+j][2r+s] = sum_k rho[4i+2j+k][4r+2s+k]`, and the analogous
/// contractions for A and B. Trace-preserving and linear; the reduction of
/// a valid state is itself a valid state.
pub fn partial_trace(rho: &DensityMatrix8, traced: Subsystem) -> DensityMatrix4 {
    let m = rho.matrix();
    let mut out = SquareMatrix::zeros(4);
    for x in 0..2 {
        for y in 0..2 {
            for u in 0..2 {
                for v in 0..2 {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for t in 0..2 {
                        let (row, col) = match traced {
                            Subsystem::C => (triple_index(x, y, t), triple_index(u, v, t)),
                            Subsystem::B => (triple_index(x, t, y), triple_index(u, t, v)),
                            Subsystem::A => (triple_index(t, x, y), triple_index(t, u, v)),
                        };
                        acc += m.get(row, col);
                    }
                    out.set(pair_index(x, y), pair_index(u, v), acc);
                }
            }
        }
    }
    DensityMatrix4::trusted(out)
}
