//! The entanglement criterion: compute all six bipartite reductions of a
//! three-qubit state and PPT-test each one.
//!
//! Three reductions are ordinary partial traces onto the pairs AB, AC and
//! BC. The other three contract two subsystems jointly along their
//! diagonal and anti-diagonal index patterns, one per cut A|BC, B|CA and
//! C|AB:
//!
//! ```text
//! red(A|BC)[ij,rs] = rho[ijj,rss] + rho[ij(1-j),rs(1-s)]
//! red(B|CA)[ij,rs] = rho[jij,srs] + rho[(1-j)ij,(1-s)rs]
//! red(C|AB)[ij,rs] = rho[jji,ssr] + rho[j(1-j)i,s(1-s)r]
//! ```
//!
//! All six are density matrices whenever the input is, and all six of a
//! separable state are separable. For 2x2 bipartite systems positivity of
//! the partial transpose is equivalent to separability, so a negative
//! eigenvalue in any partially transposed reduction certifies that the
//! full state is entangled. The converse fails: a verdict is either
//! `Entangled` or `Inconclusive`, never "separable" (see
//! [`crate::states::upb_state`] for the canonical false negative).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::{
    hermitian_eigenvalues, is_density_matrix, pair_index, partial_trace, triple_index,
    DensityMatrix4, DensityMatrix8, SquareMatrix, Subsystem, PSD_TOL,
};
use crate::states::PureState3;

/// Default threshold below which a partial-transpose eigenvalue counts as
/// negative. Values in `[-DEFAULT_TOLERANCE, 0)` are treated as numerical
/// zeros so that rounding can never produce a false positive.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// The six bipartite reductions of a three-qubit state.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReductionKind {
    /// Partial trace over C.
    AB,
    /// Partial trace over B.
    AC,
    /// Partial trace over A.
    BC,
    /// Joint contraction for the A|BC cut.
    A_BC,
    /// Joint contraction for the B|CA cut.
    B_CA,
    /// Joint contraction for the C|AB cut.
    C_AB,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 6] = [
        ReductionKind::AB,
        ReductionKind::AC,
        ReductionKind::BC,
        ReductionKind::A_BC,
        ReductionKind::B_CA,
        ReductionKind::C_AB,
    ];

    /// The three joint-contraction kinds.
    pub const CUTS: [ReductionKind; 3] =
        [ReductionKind::A_BC, ReductionKind::B_CA, ReductionKind::C_AB];

    /// True for the joint contractions, false for the partial traces.
    pub fn is_cut(self) -> bool {
        matches!(self, ReductionKind::A_BC | ReductionKind::B_CA | ReductionKind::C_AB)
    }

    /// Hyphenated lowercase name used on the command line and in JSON:
    /// `ab`, `ac`, `bc`, `a-bc`, `b-ca`, `c-ab`.
    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::AB => "ab",
            ReductionKind::AC => "ac",
            ReductionKind::BC => "bc",
            ReductionKind::A_BC => "a-bc",
            ReductionKind::B_CA => "b-ca",
            ReductionKind::C_AB => "c-ab",
        }
    }

    pub fn parse(s: &str) -> Option<ReductionKind> {
        match s.to_ascii_lowercase().as_str() {
            "ab" => Some(ReductionKind::AB),
            "ac" => Some(ReductionKind::AC),
            "bc" => Some(ReductionKind::BC),
            "a-bc" | "a_bc" => Some(ReductionKind::A_BC),
            "b-ca" | "b_ca" => Some(ReductionKind::B_CA),
            "c-ab" | "c_ab" => Some(ReductionKind::C_AB),
            _ => None,
        }
    }
}

impl std::fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Row/column index pairs contracted by a cut reduction: for bipartite
/// indices `(i, j)` returns the two 8-dimensional basis indices whose
/// entries are summed.
fn cut_sources(kind: ReductionKind, i: usize, j: usize) -> [usize; 2] {
    match kind {
        ReductionKind::A_BC => [triple_index(i, j, j), triple_index(i, j, 1 - j)],
        ReductionKind::B_CA => [triple_index(j, i, j), triple_index(1 - j, i, j)],
        ReductionKind::C_AB => [triple_index(j, j, i), triple_index(j, 1 - j, i)],
        _ => unreachable!("cut_sources is only defined for cut kinds"),
    }
}

/// Joint contraction for one of the cuts A|BC, B|CA, C|AB.
///
/// The output of a valid input is always a valid density matrix; this is
/// asserted at runtime, and a failure reports [`Error::LemmaViolation`],
/// which can only mean the input was not actually a density matrix.
pub fn special_reduction(rho: &DensityMatrix8, kind: ReductionKind) -> Result<DensityMatrix4, Error> {
    if !kind.is_cut() {
        return Err(Error::InvalidInput(format!(
            "special_reduction expects one of a-bc, b-ca, c-ab, got {kind}"
        )));
    }
    let m = rho.matrix();
    let mut out = SquareMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            for r in 0..2 {
                for s in 0..2 {
                    let rows = cut_sources(kind, i, j);
                    let cols = cut_sources(kind, r, s);
                    let val = m.get(rows[0], cols[0]) + m.get(rows[1], cols[1]);
                    out.set(pair_index(i, j), pair_index(r, s), val);
                }
            }
        }
    }
    let check = is_density_matrix(&out, PSD_TOL);
    if !check.passed() {
        return Err(Error::LemmaViolation(check));
    }
    Ok(DensityMatrix4::trusted(out))
}

/// Computes any of the six reductions.
pub fn reduce(rho: &DensityMatrix8, kind: ReductionKind) -> Result<DensityMatrix4, Error> {
    match kind {
        ReductionKind::AB => Ok(partial_trace(rho, Subsystem::C)),
        ReductionKind::AC => Ok(partial_trace(rho, Subsystem::B)),
        ReductionKind::BC => Ok(partial_trace(rho, Subsystem::A)),
        _ => special_reduction(rho, kind),
    }
}

/// Smallest eigenvalue of the partial transpose of a two-qubit state.
/// Negative exactly when the state is entangled. The transpose acts on
/// the second tensor factor; transposing the first instead transposes the
/// whole matrix and leaves the spectrum unchanged, so one convention is
/// fixed here.
pub fn ppt_min_eigenvalue(sigma: &DensityMatrix4) -> f64 {
    let pt = sigma.matrix().partial_transpose_second();
    let eigs = hermitian_eigenvalues(&pt)
        .expect("partial transpose of a Hermitian matrix is Hermitian");
    eigs[0]
}

/// One row of an [`EntanglementReport`].
#[derive(Debug, Clone)]
pub struct ReductionEntry {
    pub kind: ReductionKind,
    pub reduction: DensityMatrix4,
    pub min_pt_eigenvalue: f64,
}

/// Overall verdict. `Entangled` carries the reductions that witnessed it;
/// `Inconclusive` makes no claim either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Entangled(Vec<ReductionKind>),
    Inconclusive,
}

/// Result of running the criterion: all six reductions with their minimum
/// partial-transpose eigenvalues, plus the verdict.
#[derive(Debug, Clone)]
pub struct EntanglementReport {
    pub reductions: Vec<ReductionEntry>,
    pub verdict: Verdict,
    pub tolerance: f64,
}

impl EntanglementReport {
    pub fn is_entangled(&self) -> bool {
        matches!(self.verdict, Verdict::Entangled(_))
    }

    pub fn witnesses(&self) -> &[ReductionKind] {
        match &self.verdict {
            Verdict::Entangled(w) => w,
            Verdict::Inconclusive => &[],
        }
    }

    pub fn entry(&self, kind: ReductionKind) -> &ReductionEntry {
        self.reductions
            .iter()
            .find(|e| e.kind == kind)
            .expect("report carries all six kinds")
    }
}

/// Runs the full criterion: every reduction is evaluated (no
/// short-circuiting, the witness list is diagnostic output) and the
/// verdict is `Entangled` exactly when some partially transposed
/// reduction has an eigenvalue below `-tol`.
pub fn entanglement_criterion(rho: &DensityMatrix8, tol: f64) -> EntanglementReport {
    let mut reductions = Vec::with_capacity(6);
    let mut witnesses = Vec::new();
    for kind in ReductionKind::ALL {
        let reduction = reduce(rho, kind)
            .expect("reductions of a validated density matrix are density matrices");
        let min_pt_eigenvalue = ppt_min_eigenvalue(&reduction);
        if min_pt_eigenvalue < -tol {
            witnesses.push(kind);
        }
        reductions.push(ReductionEntry {
            kind,
            reduction,
            min_pt_eigenvalue,
        });
    }
    let verdict = if witnesses.is_empty() {
        Verdict::Inconclusive
    } else {
        Verdict::Entangled(witnesses)
    };
    EntanglementReport {
        reductions,
        verdict,
        tolerance: tol,
    }
}

/// Decomposition of a cut reduction of a pure state into (at most) two
/// rank-1 pieces with weights summing to 1.
///
/// For the A|BC cut the two pieces collect the amplitudes `c_mnn`
/// (second and third qubit indices equal) and `c_mn(1-n)` (opposite); the
/// other cuts permute the roles. A piece whose amplitude block vanishes
/// identically is recorded as absent with weight exactly 0.
#[derive(Debug, Clone)]
pub struct PairDecomposition {
    pub weight_plain: f64,
    pub state_plain: Option<DensityMatrix4>,
    pub weight_flipped: f64,
    pub state_flipped: Option<DensityMatrix4>,
}

impl PairDecomposition {
    /// `weight_plain * state_plain + weight_flipped * state_flipped`,
    /// absent pieces contributing nothing. Equals the matching cut
    /// reduction of the source state.
    pub fn reconstruction(&self) -> SquareMatrix {
        let mut acc = SquareMatrix::zeros(4);
        if let Some(s) = &self.state_plain {
            acc = acc.add(&s.matrix().scale(self.weight_plain));
        }
        if let Some(s) = &self.state_flipped {
            acc = acc.add(&s.matrix().scale(self.weight_flipped));
        }
        acc
    }
}

fn rank_one(amps: &[Complex64; 4]) -> DensityMatrix4 {
    let mut m = SquareMatrix::zeros(4);
    for u in 0..4 {
        for v in 0..4 {
            m.set(u, v, amps[u] * amps[v].conj());
        }
    }
    DensityMatrix4::trusted(m)
}

/// Splits a pure state along one cut into the two weighted rank-1 pieces
/// whose sum is the cut reduction.
pub fn pure_pair_decomposition(
    psi: &PureState3,
    kind: ReductionKind,
) -> Result<PairDecomposition, Error> {
    if !kind.is_cut() {
        return Err(Error::InvalidInput(format!(
            "pure_pair_decomposition expects one of a-bc, b-ca, c-ab, got {kind}"
        )));
    }
    let c = psi.amplitudes();
    let mut plain = [Complex64::new(0.0, 0.0); 4];
    let mut flipped = [Complex64::new(0.0, 0.0); 4];
    for m in 0..2 {
        for n in 0..2 {
            let [src_plain, src_flipped] = cut_sources(kind, m, n);
            plain[pair_index(m, n)] = c[src_plain];
            flipped[pair_index(m, n)] = c[src_flipped];
        }
    }
    let make = |amps: [Complex64; 4]| -> (f64, Option<DensityMatrix4>) {
        let w: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if w == 0.0 {
            return (0.0, None);
        }
        let eta = w.sqrt();
        let normalized = amps.map(|z| z / eta);
        (w, Some(rank_one(&normalized)))
    };
    let (weight_plain, state_plain) = make(plain);
    let (weight_flipped, state_flipped) = make(flipped);
    Ok(PairDecomposition {
        weight_plain,
        state_plain,
        weight_flipped,
        state_flipped,
    })
}
