//! Constructors for the three-qubit state families used throughout the
//! crate, plus deterministic seeded samplers for the verification harness.
//!
//! Randomness policy: one fixed generator for the whole repository,
//! `ChaCha8Rng` seeded from a caller-supplied 64-bit seed. Haar-uniform
//! single-qubit states are drawn as two standard complex Gaussians per
//! amplitude followed by normalization; mixing weights are Dirichlet(1),
//! i.e. normalized unit exponentials. Identical seeds give identical
//! states, bit for bit.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::Error;
use crate::linalg::{
    pair_index, triple_index, DensityMatrix4, DensityMatrix8, SquareMatrix,
};

/// Tolerance on squared norms of state vectors.
pub const NORM_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn norm_sq(amps: &[Complex64]) -> f64 {
    amps.iter().map(|z| z.norm_sqr()).sum()
}

/// Normalized three-qubit pure state: eight amplitudes `c_ijk` indexed
/// `4i + 2j + k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState3 {
    amplitudes: [Complex64; 8],
}

impl PureState3 {
    pub fn new(amplitudes: [Complex64; 8]) -> Result<Self, Error> {
        let n = norm_sq(&amplitudes);
        if !n.is_finite() || (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sq: n });
        }
        Ok(PureState3 { amplitudes })
    }

    /// Computational basis state `|i_A j_B k_C>`.
    pub fn basis(i: usize, j: usize, k: usize) -> Self {
        let mut amplitudes = [ZERO; 8];
        amplitudes[triple_index(i, j, k)] = Complex64::new(1.0, 0.0);
        PureState3 { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex64; 8] {
        &self.amplitudes
    }
}

/// Product of three single-qubit pure states `a ⊗ b ⊗ c`, each factor
/// normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductPureState {
    a: [Complex64; 2],
    b: [Complex64; 2],
    c: [Complex64; 2],
}

impl ProductPureState {
    pub fn new(a: [Complex64; 2], b: [Complex64; 2], c: [Complex64; 2]) -> Result<Self, Error> {
        for factor in [&a, &b, &c] {
            let n = norm_sq(factor);
            if !n.is_finite() || (n - 1.0).abs() > NORM_TOL {
                return Err(Error::NotNormalized { norm_sq: n });
            }
        }
        Ok(ProductPureState { a, b, c })
    }

    pub fn factors(&self) -> (&[Complex64; 2], &[Complex64; 2], &[Complex64; 2]) {
        (&self.a, &self.b, &self.c)
    }

    /// Joint amplitudes `c_ijk = a_i b_j c_k`.
    pub fn amplitudes(&self) -> [Complex64; 8] {
        let mut amps = [ZERO; 8];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    amps[triple_index(i, j, k)] = self.a[i] * self.b[j] * self.c[k];
                }
            }
        }
        amps
    }

    pub fn to_pure(&self) -> PureState3 {
        PureState3::new(self.amplitudes()).expect("product of unit factors is normalized")
    }
}

/// Convex mixture of product pure states: the explicit witness form of a
/// separable state.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparableEnsemble {
    terms: Vec<(f64, ProductPureState)>,
}

impl SeparableEnsemble {
    pub fn new(terms: Vec<(f64, ProductPureState)>) -> Result<Self, Error> {
        if terms.is_empty() {
            return Err(Error::InvalidInput("ensemble needs at least one term".into()));
        }
        let mut total = 0.0;
        for (w, _) in &terms {
            if !w.is_finite() || *w < 0.0 {
                return Err(Error::ParamOutOfRange(format!("ensemble weight {w} not in [0, 1]")));
            }
            total += w;
        }
        if (total - 1.0).abs() > NORM_TOL {
            return Err(Error::ParamOutOfRange(format!("ensemble weights sum to {total}, expected 1")));
        }
        Ok(SeparableEnsemble { terms })
    }

    pub fn terms(&self) -> &[(f64, ProductPureState)] {
        &self.terms
    }

    /// The mixed state `sum_a p_a |psi_a><psi_a|`, accumulated in term
    /// order.
    pub fn mixture(&self) -> DensityMatrix8 {
        let mut acc = SquareMatrix::zeros(8);
        for (w, s) in &self.terms {
            acc = acc.add(&product_pure(s).into_matrix().scale(*w));
        }
        DensityMatrix8::trusted(acc)
    }
}

/// Mixing weights of the pair-entangled mixture built by
/// [`molecule_state`]: one weight per qubit pair, summing to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoleculeParams {
    pub p_ab: f64,
    pub p_bc: f64,
    pub p_ac: f64,
}

impl MoleculeParams {
    pub fn new(p_ab: f64, p_bc: f64, p_ac: f64) -> Result<Self, Error> {
        for (name, p) in [("p_ab", p_ab), ("p_bc", p_bc), ("p_ac", p_ac)] {
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                return Err(Error::ParamOutOfRange(format!("{name} = {p} not in [0, 1]")));
            }
        }
        let total = p_ab + p_bc + p_ac;
        if (total - 1.0).abs() > NORM_TOL {
            return Err(Error::ParamOutOfRange(format!(
                "pair weights sum to {total}, expected 1"
            )));
        }
        Ok(MoleculeParams { p_ab, p_bc, p_ac })
    }
}

/// Rank-1 projector `|psi><psi|` of a normalized pure state.
pub fn pure_to_density(psi: &PureState3) -> DensityMatrix8 {
    let c = psi.amplitudes();
    let mut m = SquareMatrix::zeros(8);
    for u in 0..8 {
        for v in 0..8 {
            m.set(u, v, c[u] * c[v].conj());
        }
    }
    DensityMatrix8::trusted(m)
}

/// The GHZ state `(|000> + |111>)/sqrt(2)` as a density matrix.
pub fn ghz() -> DensityMatrix8 {
    let inv = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut amps = [ZERO; 8];
    amps[triple_index(0, 0, 0)] = inv;
    amps[triple_index(1, 1, 1)] = inv;
    pure_to_density(&PureState3::new(amps).expect("GHZ amplitudes are normalized"))
}

/// Projector onto the Bell state `(|00> + |11>)/sqrt(2)`.
pub fn bell_projector() -> DensityMatrix4 {
    let mut m = SquareMatrix::zeros(4);
    let h = Complex64::new(0.5, 0.0);
    for (r, c) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
        m.set(r, c, h);
    }
    DensityMatrix4::trusted(m)
}

/// Projector onto the singlet `(|01> - |10>)/sqrt(2)`.
pub fn singlet_projector() -> DensityMatrix4 {
    let mut m = SquareMatrix::zeros(4);
    let h = Complex64::new(0.5, 0.0);
    let mh = Complex64::new(-0.5, 0.0);
    m.set(1, 1, h);
    m.set(2, 2, h);
    m.set(1, 2, mh);
    m.set(2, 1, mh);
    DensityMatrix4::trusted(m)
}

/// Two-qubit Werner state `x S + (1-x)/4 I` with `S` the singlet
/// projector. Its partial transpose has eigenvalues `(1+x)/4` (three-fold)
/// and `(1-3x)/4`, so it is entangled exactly for `x > 1/3`.
pub fn werner_bipartite(x: f64) -> Result<DensityMatrix4, Error> {
    if !x.is_finite() || !(0.0..=1.0).contains(&x) {
        return Err(Error::ParamOutOfRange(format!("x = {x} not in [0, 1]")));
    }
    let m = singlet_projector()
        .into_matrix()
        .scale(x)
        .add(&SquareMatrix::identity(4).scale(0.25 * (1.0 - x)));
    Ok(DensityMatrix4::trusted(m))
}

/// The three-qubit coupler with the singlet supported on both the
/// `|ijj>` and `|ij(1-j)>` subspaces: diagonal 1/4 on `|010>`, `|011>`,
/// `|100>`, `|101>` and -1/4 on the Hermitian pairs
/// `(|010>,|101>)` and `(|011>,|100>)`.
fn werner_coupler() -> SquareMatrix {
    let q = Complex64::new(0.25, 0.0);
    let mq = Complex64::new(-0.25, 0.0);
    let mut r = SquareMatrix::zeros(8);
    for idx in [2usize, 3, 4, 5] {
        r.set(idx, idx, q);
    }
    for (a, b) in [(2usize, 5usize), (3, 4), (4, 3), (5, 2)] {
        r.set(a, b, mq);
    }
    r
}

/// Three-qubit family `x R + (1-x)/8 I` whose A-vs-BC reduction is the
/// Werner state [`werner_bipartite`]`(x)`.
pub fn werner_embedded(x: f64) -> Result<DensityMatrix8, Error> {
    if !x.is_finite() || !(0.0..=1.0).contains(&x) {
        return Err(Error::ParamOutOfRange(format!("x = {x} not in [0, 1]")));
    }
    let m = werner_coupler()
        .scale(x)
        .add(&SquareMatrix::identity(8).scale(0.125 * (1.0 - x)));
    Ok(DensityMatrix8::trusted(m))
}

/// Maps a bipartite index pair onto an 8-dimensional basis index.
type EmbeddingMap = fn(usize, usize) -> usize;

/// Index maps of the six embeddings: each slot writes `R/2` onto two
/// disjoint 4-dimensional coordinate subspaces, chosen so that the
/// matching reduction recovers `R` exactly.
///
/// Slots 1-3 invert the A|BC, B|CA and C|AB cut reductions; slots 4-6
/// invert the partial traces onto AB, AC and BC.
fn embedding_maps(slot: usize) -> Option<[EmbeddingMap; 2]> {
    let maps: [EmbeddingMap; 2] = match slot {
        1 => [|i, j| triple_index(i, j, j), |i, j| triple_index(i, j, 1 - j)],
        2 => [|i, j| triple_index(j, i, j), |i, j| triple_index(1 - j, i, j)],
        3 => [|i, j| triple_index(j, j, i), |i, j| triple_index(j, 1 - j, i)],
        4 => [|i, j| triple_index(i, j, 0), |i, j| triple_index(i, j, 1)],
        5 => [|i, j| triple_index(i, 0, j), |i, j| triple_index(i, 1, j)],
        6 => [|i, j| triple_index(0, i, j), |i, j| triple_index(1, i, j)],
        _ => return None,
    };
    Some(maps)
}

/// Embeds a two-qubit state into a three-qubit state through one of the
/// six slots; the reduction matching the slot returns `r` entrywise.
pub fn embed_bipartite(r: &DensityMatrix4, slot: usize) -> Result<DensityMatrix8, Error> {
    let maps = embedding_maps(slot).ok_or(Error::InvalidSlot(slot))?;
    let mut out = SquareMatrix::zeros(8);
    for map in maps {
        for i in 0..2 {
            for j in 0..2 {
                for u in 0..2 {
                    for v in 0..2 {
                        let val = r.matrix().get(pair_index(i, j), pair_index(u, v)) * 0.5;
                        out.set(map(i, j), map(u, v), val);
                    }
                }
            }
        }
    }
    Ok(DensityMatrix8::trusted(out))
}

/// Projector onto `(|u> + |v>)/sqrt(2)` for two basis indices.
fn symmetric_pair_projector(u: usize, v: usize) -> SquareMatrix {
    let h = Complex64::new(0.5, 0.0);
    let mut m = SquareMatrix::zeros(8);
    for (r, c) in [(u, u), (u, v), (v, u), (v, v)] {
        m.set(r, c, h);
    }
    m
}

/// Mixture of the three pair-entangled "molecule" states
/// `(|0_r 1_s> + |1_r 0_s>)/sqrt(2) ⊗ |0_rest>`, one per qubit pair,
/// with weights `p`.
pub fn molecule_state(p: &MoleculeParams) -> DensityMatrix8 {
    // Pair states in the 4i+2j+k index convention, the spare qubit in |0>:
    //   AB: (|010> + |100>)/sqrt(2)   -> indices 2, 4
    //   BC: (|001> + |010>)/sqrt(2)   -> indices 1, 2
    //   AC: (|001> + |100>)/sqrt(2)   -> indices 1, 4
    let m = symmetric_pair_projector(2, 4)
        .scale(p.p_ab)
        .add(&symmetric_pair_projector(1, 2).scale(p.p_bc))
        .add(&symmetric_pair_projector(1, 4).scale(p.p_ac));
    DensityMatrix8::trusted(m)
}

/// The four orthonormal product vectors `|0,1,+>`, `|1,+,0>`, `|+,0,1>`,
/// `|-,-,->` (amplitudes indexed `4i + 2j + k`).
pub fn upb_product_basis() -> [[Complex64; 8]; 4] {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut psi1 = [ZERO; 8];
    psi1[triple_index(0, 1, 0)] = h;
    psi1[triple_index(0, 1, 1)] = h;
    let mut psi2 = [ZERO; 8];
    psi2[triple_index(1, 0, 0)] = h;
    psi2[triple_index(1, 1, 0)] = h;
    let mut psi3 = [ZERO; 8];
    psi3[triple_index(0, 0, 1)] = h;
    psi3[triple_index(1, 0, 1)] = h;
    let mut psi4 = [ZERO; 8];
    let q = 0.5 * std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let sign = if (i + j + k) % 2 == 0 { q } else { -q };
                psi4[triple_index(i, j, k)] = Complex64::new(sign, 0.0);
            }
        }
    }
    [psi1, psi2, psi3, psi4]
}

/// The bound-entangled state `(I - sum_i |psi_i><psi_i|)/4` built on the
/// unextendible product basis of [`upb_product_basis`]. Every one of its
/// six reductions passes the PPT test even though the state is entangled,
/// which is what makes the criterion sufficient rather than necessary.
pub fn upb_state() -> DensityMatrix8 {
    let mut m = SquareMatrix::identity(8);
    for psi in upb_product_basis() {
        for u in 0..8 {
            for v in 0..8 {
                let cur = m.get(u, v);
                m.set(u, v, cur - psi[u] * psi[v].conj());
            }
        }
    }
    DensityMatrix8::trusted(m.scale(0.25))
}

/// Tensor-product projector `|a><a| ⊗ |b><b| ⊗ |c><c|`.
pub fn product_pure(s: &ProductPureState) -> DensityMatrix8 {
    pure_to_density(&s.to_pure())
}

fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Haar-uniform single-qubit state: two complex Gaussians, normalized.
fn haar_qubit(rng: &mut ChaCha8Rng) -> [Complex64; 2] {
    loop {
        let a = complex_gaussian(rng);
        let b = complex_gaussian(rng);
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if n > 1e-6 {
            return [a / n, b / n];
        }
    }
}

/// Dirichlet(1) weights: unit exponentials, normalized.
fn dirichlet_weights(rng: &mut ChaCha8Rng, k: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1).max(f64::MIN_POSITIVE)).collect();
    let total: f64 = raw.iter().sum();
    let mut w: Vec<f64> = raw.iter().map(|x| x / total).collect();
    // Nudge the largest weight so the sum is exactly 1 after rounding.
    let sum: f64 = w.iter().sum();
    let imax = (0..k).max_by(|&a, &b| w[a].total_cmp(&w[b])).unwrap();
    w[imax] += 1.0 - sum;
    w
}

/// Seeded Haar-uniform three-qubit pure state.
pub fn random_pure_state(seed: u64) -> PureState3 {
    let mut rng = seeded_rng(seed);
    loop {
        let amps: Vec<Complex64> = (0..8).map(|_| complex_gaussian(&mut rng)).collect();
        let n = norm_sq(&amps).sqrt();
        if n > 1e-6 {
            let mut out = [ZERO; 8];
            for (o, a) in out.iter_mut().zip(&amps) {
                *o = a / n;
            }
            return PureState3::new(out).expect("normalized by construction");
        }
    }
}

/// Seeded product of three Haar-uniform qubit states.
pub fn random_product_state(seed: u64) -> ProductPureState {
    let mut rng = seeded_rng(seed);
    let a = haar_qubit(&mut rng);
    let b = haar_qubit(&mut rng);
    let c = haar_qubit(&mut rng);
    ProductPureState::new(a, b, c).expect("factors are normalized")
}

/// Seeded separable mixed state: `k` product pure states with
/// Dirichlet(1) weights. Returns both the explicit ensemble and its
/// mixture. `k` must lie in 1..=64.
pub fn random_separable(seed: u64, k: usize) -> Result<(SeparableEnsemble, DensityMatrix8), Error> {
    if k == 0 || k > 64 {
        return Err(Error::ParamOutOfRange(format!("ensemble size k = {k} not in 1..=64")));
    }
    let mut rng = seeded_rng(seed);
    let weights = dirichlet_weights(&mut rng, k);
    let mut terms = Vec::with_capacity(k);
    for w in weights {
        let a = haar_qubit(&mut rng);
        let b = haar_qubit(&mut rng);
        let c = haar_qubit(&mut rng);
        terms.push((w, ProductPureState::new(a, b, c).expect("factors are normalized")));
    }
    let ensemble = SeparableEnsemble::new(terms)?;
    let mixture = ensemble.mixture();
    Ok((ensemble, mixture))
}

/// Seeded random density matrix `G G^dagger / tr(G G^dagger)` with `G`
/// an 8x8 matrix of standard complex Gaussians.
pub fn random_density(seed: u64) -> DensityMatrix8 {
    let mut rng = seeded_rng(seed);
    let mut g = SquareMatrix::zeros(8);
    for r in 0..8 {
        for c in 0..8 {
            g.set(r, c, complex_gaussian(&mut rng));
        }
    }
    let gg = g.matmul(&g.dagger());
    let trace = gg.trace().re;
    DensityMatrix8::trusted(gg.scale(1.0 / trace))
}
