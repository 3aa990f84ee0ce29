//! Executable verification harness: every structural claim the library
//! rests on, bound to a named, seeded, reproducible check.
//!
//! Each check reduces to comparing an observed vector of reals against an
//! expected one at a stated tolerance, so results are machine-checkable
//! and printable one per line. The full suite (`run_all`) backs the
//! `verify` CLI subcommand.

use serde::Serialize;

use crate::criterion::{
    entanglement_criterion, ppt_min_eigenvalue, pure_pair_decomposition, reduce, ReductionKind,
    DEFAULT_TOLERANCE,
};
use crate::linalg::{is_density_matrix, kron, DensityMatrix8, SquareMatrix};
use crate::states::{
    ghz, molecule_state, product_pure, pure_to_density, random_density, random_product_state,
    random_pure_state, random_separable, upb_product_basis, upb_state, werner_bipartite,
    werner_embedded, MoleculeParams,
};

use num_complex::Complex64;

/// Outcome of one named check. `passed` holds exactly when
/// `|observed[i] - expected[i]| <= tolerance` for every component (both
/// sides sorted first for spectrum-valued checks).
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub observed: Vec<f64>,
    pub expected: Vec<f64>,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CheckResult {
    fn from_vectors(
        name: String,
        observed: Vec<f64>,
        expected: Vec<f64>,
        tolerance: f64,
        seed: Option<u64>,
    ) -> Self {
        let passed = observed.len() == expected.len()
            && observed
                .iter()
                .zip(&expected)
                .all(|(o, e)| (o - e).abs() <= tolerance);
        CheckResult {
            name,
            passed,
            observed,
            expected,
            tolerance,
            seed,
        }
    }

    /// One-line rendering for terminal output.
    pub fn line(&self) -> String {
        if self.passed {
            format!("ok   {}", self.name)
        } else {
            format!(
                "FAIL {}  observed={:?} expected={:?} tolerance={:.1e}",
                self.name, self.observed, self.expected, self.tolerance
            )
        }
    }
}

fn value_check(name: &str, observed: Vec<f64>, expected: Vec<f64>, tol: f64) -> CheckResult {
    CheckResult::from_vectors(name.to_string(), observed, expected, tol, None)
}

fn spectrum_check(name: &str, mut observed: Vec<f64>, mut expected: Vec<f64>, tol: f64) -> CheckResult {
    observed.sort_by(f64::total_cmp);
    expected.sort_by(f64::total_cmp);
    CheckResult::from_vectors(name.to_string(), observed, expected, tol, None)
}

/// Encodes lower bounds `v >= -tol`: the observed values are the negative
/// parts `min(0, v)`, expected all zero.
fn negative_part_check(name: &str, values: &[f64], tol: f64) -> CheckResult {
    let observed: Vec<f64> = values.iter().map(|v| v.min(0.0)).collect();
    let expected = vec![0.0; values.len()];
    CheckResult::from_vectors(name.to_string(), observed, expected, tol, None)
}

fn bool_check(name: &str, ok: bool) -> CheckResult {
    CheckResult::from_vectors(
        name.to_string(),
        vec![if ok { 1.0 } else { 0.0 }],
        vec![1.0],
        0.0,
        None,
    )
}

/// GHZ: the three pair reductions are classical mixtures (PPT holds), the
/// three cut reductions coincide and each is the maximally entangled Bell
/// projector with partial-transpose minimum -1/2, so the verdict is
/// entangled with all three cuts as witnesses.
pub fn check_ghz() -> Vec<CheckResult> {
    let rho = ghz();
    let report = entanglement_criterion(&rho, DEFAULT_TOLERANCE);

    let pair_minima: Vec<f64> = [ReductionKind::AB, ReductionKind::AC, ReductionKind::BC]
        .iter()
        .map(|&k| report.entry(k).min_pt_eigenvalue)
        .collect();

    let cuts: Vec<&SquareMatrix> = ReductionKind::CUTS
        .iter()
        .map(|&k| report.entry(k).reduction.matrix())
        .collect();
    let pairwise = vec![
        cuts[0].max_abs_diff(cuts[1]),
        cuts[0].max_abs_diff(cuts[2]),
        cuts[1].max_abs_diff(cuts[2]),
    ];

    let cut_minima: Vec<f64> = ReductionKind::CUTS
        .iter()
        .map(|&k| report.entry(k).min_pt_eigenvalue)
        .collect();

    vec![
        negative_part_check("ghz.pair_reductions_ppt", &pair_minima, 1e-10),
        value_check("ghz.cut_reductions_pairwise_equal", pairwise, vec![0.0; 3], 1e-14),
        value_check("ghz.cut_min_pt_eigenvalues", cut_minima, vec![-0.5; 3], 1e-10),
        bool_check(
            "ghz.verdict_entangled_via_cuts",
            report.witnesses() == ReductionKind::CUTS,
        ),
    ]
}

/// Default mixing-parameter grid: 0 to 1 in steps of 0.1, plus both sides
/// of the x = 1/3 entanglement boundary.
pub fn default_x_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    grid.push(1.0 / 3.0 - 1e-6);
    grid.push(1.0 / 3.0 + 1e-6);
    grid
}

/// Werner family: the A|BC cut of `werner_embedded(x)` is the two-qubit
/// Werner state, whose partial transpose has spectrum
/// `{(1-3x)/4, (1+x)/4 x3}`; the verdict flips to entangled exactly past
/// x = 1/3.
pub fn check_werner_family(x_grid: &[f64]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &x in x_grid {
        let rho = werner_embedded(x).expect("grid values lie in [0, 1]");
        let red = reduce(&rho, ReductionKind::A_BC).expect("valid state");
        let pt = red.matrix().partial_transpose_second();
        let spectrum = crate::linalg::hermitian_eigenvalues(&pt).expect("PT stays Hermitian");
        let expected = vec![
            0.25 * (1.0 - 3.0 * x),
            0.25 * (1.0 + x),
            0.25 * (1.0 + x),
            0.25 * (1.0 + x),
        ];
        out.push(spectrum_check(
            &format!("werner.cut_pt_spectrum[x={x:.7}]"),
            spectrum,
            expected,
            1e-10,
        ));

        let report = entanglement_criterion(&rho, DEFAULT_TOLERANCE);
        let should_flag = 0.25 * (1.0 - 3.0 * x) < -DEFAULT_TOLERANCE;
        out.push(bool_check(
            &format!("werner.verdict[x={x:.7}]"),
            report.is_entangled() == should_flag,
        ));
    }
    out
}

/// The reduction kind that inverts each embedding slot.
fn slot_kind(slot: usize) -> ReductionKind {
    match slot {
        1 => ReductionKind::A_BC,
        2 => ReductionKind::B_CA,
        3 => ReductionKind::C_AB,
        4 => ReductionKind::AB,
        5 => ReductionKind::AC,
        6 => ReductionKind::BC,
        _ => unreachable!("slots are 1..=6"),
    }
}

/// Embeddings: each of the six slots embeds an entangled two-qubit state
/// (Werner at x = 0.9) so that the matching reduction recovers it
/// entrywise, making the three-qubit state entangled with the matching
/// witness. A seeded random two-qubit state exercises the same round trip.
pub fn check_embeddings(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let r = werner_bipartite(0.9).expect("0.9 lies in [0, 1]");
    let r_random = reduce(&random_density(seed), ReductionKind::AB).expect("valid state");
    for slot in 1..=6 {
        let kind = slot_kind(slot);
        let rho = crate::states::embed_bipartite(&r, slot).expect("slot in range");
        let back = reduce(&rho, kind).expect("valid state");
        out.push(value_check(
            &format!("embed.round_trip[slot={slot}]"),
            vec![back.matrix().max_abs_diff(r.matrix())],
            vec![0.0],
            1e-14,
        ));

        let report = entanglement_criterion(&rho, DEFAULT_TOLERANCE);
        out.push(bool_check(
            &format!("embed.verdict_with_witness[slot={slot}]"),
            report.is_entangled() && report.witnesses().contains(&kind),
        ));

        let rho_rand = crate::states::embed_bipartite(&r_random, slot).expect("slot in range");
        let back_rand = reduce(&rho_rand, kind).expect("valid state");
        let mut check = value_check(
            &format!("embed.random_round_trip[slot={slot}]"),
            vec![back_rand.matrix().max_abs_diff(r_random.matrix())],
            vec![0.0],
            1e-14,
        );
        check.seed = Some(seed);
        out.push(check);
    }
    out
}

/// Default pair-weight grid: every combination with components from
/// {0, 1/4, 1/3, 1/2, 1} that sums to 1.
pub fn default_molecule_grid() -> Vec<MoleculeParams> {
    let choices = [0.0, 0.25, 1.0 / 3.0, 0.5, 1.0];
    let mut grid = Vec::new();
    for &a in &choices {
        for &b in &choices {
            for &c in &choices {
                if let Ok(p) = MoleculeParams::new(a, b, c) {
                    grid.push(p);
                }
            }
        }
    }
    grid
}

/// Pair-entangled mixtures: every pair reduction has the sparse
/// one-excitation shape with off-diagonal `p_rs / 2`, each pair with
/// positive weight is PPT-negative, and the overall verdict is entangled.
pub fn check_molecules(grid: &[MoleculeParams]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for p in grid {
        let tag = format!("[p={:.2},{:.2},{:.2}]", p.p_ab, p.p_bc, p.p_ac);
        let rho = molecule_state(p);
        let pairs = [
            (ReductionKind::AB, p.p_ab),
            (ReductionKind::AC, p.p_ac),
            (ReductionKind::BC, p.p_bc),
        ];

        // Allowed nonzero positions: the diagonal (0,0), (1,1), (2,2) and
        // the off-diagonal pair (1,2)/(2,1); everything else, including
        // (3,3), must vanish.
        let mut max_off_pattern = 0.0f64;
        let mut max_coupling_err = 0.0f64;
        for &(kind, weight) in &pairs {
            let red = reduce(&rho, kind).expect("valid state");
            let m = red.matrix();
            for r in 0..4 {
                for c in 0..4 {
                    let allowed =
                        (r == c && r < 3) || (r == 1 && c == 2) || (r == 2 && c == 1);
                    if !allowed {
                        max_off_pattern = max_off_pattern.max(m.get(r, c).norm());
                    }
                }
            }
            let half = Complex64::new(0.5 * weight, 0.0);
            max_coupling_err = max_coupling_err
                .max((m.get(1, 2) - half).norm())
                .max((m.get(2, 1) - half).norm());
        }
        out.push(value_check(
            &format!("molecule.pair_shape{tag}"),
            vec![max_off_pattern, max_coupling_err],
            vec![0.0, 0.0],
            1e-14,
        ));

        let all_weighted_pairs_negative = pairs.iter().all(|&(kind, weight)| {
            let red = reduce(&rho, kind).expect("valid state");
            weight == 0.0 || ppt_min_eigenvalue(&red) < -1e-10
        });
        out.push(bool_check(
            &format!("molecule.weighted_pairs_pt_negative{tag}"),
            all_weighted_pairs_negative,
        ));

        let report = entanglement_criterion(&rho, DEFAULT_TOLERANCE);
        out.push(bool_check(&format!("molecule.verdict_entangled{tag}"), report.is_entangled()));
    }
    out
}

/// The bound-entangled counterexample: its four product vectors are
/// orthonormal, all six reductions pass the PPT test and the verdict is
/// inconclusive. The state itself is nevertheless entangled, which is why
/// the criterion is sufficient only; showing that requires machinery
/// beyond this crate.
pub fn check_upb() -> Vec<CheckResult> {
    let basis = upb_product_basis();
    let mut max_gram_err = 0.0f64;
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let dot: Complex64 = u.iter().zip(v).map(|(x, y)| x.conj() * y).sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            max_gram_err = max_gram_err.max((dot - expected).norm());
        }
    }

    let report = entanglement_criterion(&upb_state(), DEFAULT_TOLERANCE);
    let minima: Vec<f64> = report.reductions.iter().map(|e| e.min_pt_eigenvalue).collect();

    vec![
        value_check("upb.basis_gram_identity", vec![max_gram_err], vec![0.0], 1e-12),
        negative_part_check("upb.reductions_ppt", &minima, 1e-10),
        bool_check("upb.verdict_inconclusive", !report.is_entangled()),
    ]
}

/// 2x2 density matrix from a single-qubit amplitude pair.
fn qubit_density(amps: &[Complex64; 2]) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(2);
    for r in 0..2 {
        for c in 0..2 {
            m.set(r, c, amps[r] * amps[c].conj());
        }
    }
    m
}

/// The 2x2 factor carried by a cut reduction of a product state: the
/// middle qubit's density matrix with its off-diagonal damped by
/// `gamma = 2 Re(z0 conj(z1))` of the remaining qubit.
fn damped_qubit(amps: &[Complex64; 2], gamma: f64) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(2);
    m.set(0, 0, Complex64::new(amps[0].norm_sqr(), 0.0));
    m.set(1, 1, Complex64::new(amps[1].norm_sqr(), 0.0));
    m.set(0, 1, amps[0] * amps[1].conj() * gamma);
    m.set(1, 0, amps[0].conj() * amps[1] * gamma);
    m
}

fn gamma(amps: &[Complex64; 2]) -> f64 {
    2.0 * (amps[0] * amps[1].conj()).re
}

/// Property suite over a seed range: soundness (separable mixtures are
/// never flagged), closure (all six reductions of random states validate
/// as density matrices), linearity of the reductions, the two-piece
/// decomposition of pure-state cuts, and the product-state factorization
/// of the cut reductions.
pub fn run_property_suite(seeds: std::ops::Range<u64>) -> Vec<CheckResult> {
    let tag = format!("[seeds={}..{}]", seeds.start, seeds.end);
    let mut out = Vec::new();

    // Separable states must never be flagged: the criterion is one-sided.
    let mut false_positives = 0u64;
    for seed in seeds.clone() {
        let k = (seed % 8) as usize + 1;
        let (_, mixture) = random_separable(seed, k).expect("k in 1..=8");
        if entanglement_criterion(&mixture, DEFAULT_TOLERANCE).is_entangled() {
            false_positives += 1;
        }
    }
    let mut check = value_check(
        &format!("property.separable_soundness{tag}"),
        vec![false_positives as f64],
        vec![0.0],
        0.0,
    );
    check.seed = Some(seeds.start);
    out.push(check);

    // All six reductions of arbitrary states are density matrices.
    let mut invalid_reductions = 0u64;
    for seed in seeds.clone() {
        let rho = random_density(seed);
        for kind in ReductionKind::ALL {
            let red = reduce(&rho, kind).expect("valid state");
            if !is_density_matrix(red.matrix(), 1e-10).passed() {
                invalid_reductions += 1;
            }
        }
    }
    let mut check = value_check(
        &format!("property.reductions_are_states{tag}"),
        vec![invalid_reductions as f64],
        vec![0.0],
        0.0,
    );
    check.seed = Some(seeds.start);
    out.push(check);

    // Reductions are linear in the state.
    let mut max_linearity_err = 0.0f64;
    for seed in seeds.clone() {
        let parts = [
            random_density(3 * seed + 1_000_003),
            random_density(3 * seed + 1_000_004),
            random_density(3 * seed + 1_000_005),
        ];
        let w = [0.5, 0.3, 0.2];
        let mut mixed = SquareMatrix::zeros(8);
        for (p, wi) in parts.iter().zip(w) {
            mixed = mixed.add(&p.matrix().scale(wi));
        }
        let mixed = DensityMatrix8::new(mixed).expect("convex mixture of states");
        for kind in ReductionKind::ALL {
            let lhs = reduce(&mixed, kind).expect("valid state");
            let mut rhs = SquareMatrix::zeros(4);
            for (p, wi) in parts.iter().zip(w) {
                rhs = rhs.add(&reduce(p, kind).expect("valid state").matrix().scale(wi));
            }
            max_linearity_err = max_linearity_err.max(lhs.matrix().max_abs_diff(&rhs));
        }
    }
    let mut check = value_check(
        &format!("property.reduction_linearity{tag}"),
        vec![max_linearity_err],
        vec![0.0],
        1e-13,
    );
    check.seed = Some(seeds.start);
    out.push(check);

    // Pure-state cut reductions split into two weighted rank-1 pieces.
    let decomposition_seeds = seeds.start..seeds.start + 100;
    let mut max_recon_err = 0.0f64;
    let mut max_weight_err = 0.0f64;
    for seed in decomposition_seeds {
        let psi = random_pure_state(seed);
        let rho = pure_to_density(&psi);
        for kind in ReductionKind::CUTS {
            let d = pure_pair_decomposition(&psi, kind).expect("cut kind");
            max_weight_err = max_weight_err.max((d.weight_plain + d.weight_flipped - 1.0).abs());
            let red = reduce(&rho, kind).expect("valid state");
            max_recon_err = max_recon_err.max(d.reconstruction().max_abs_diff(red.matrix()));
        }
    }
    let mut check = value_check(
        &format!("property.pure_cut_decomposition{tag}"),
        vec![max_recon_err, max_weight_err],
        vec![0.0, 0.0],
        1e-12,
    );
    check.seed = Some(seeds.start);
    out.push(check);

    // Cut reductions of product states factor as rho_X ⊗ damped qubit.
    let factorization_seeds = seeds.start..seeds.start + 100;
    let mut max_factor_err = 0.0f64;
    for seed in factorization_seeds {
        let s = random_product_state(seed);
        let rho = product_pure(&s);
        let (a, b, c) = s.factors();
        let cases = [
            (ReductionKind::A_BC, qubit_density(a), damped_qubit(b, gamma(c))),
            (ReductionKind::B_CA, qubit_density(b), damped_qubit(c, gamma(a))),
            (ReductionKind::C_AB, qubit_density(c), damped_qubit(a, gamma(b))),
        ];
        for (kind, first, second) in cases {
            let red = reduce(&rho, kind).expect("valid state");
            let expected = kron(&first, &second);
            max_factor_err = max_factor_err.max(red.matrix().max_abs_diff(&expected));
        }
    }
    let mut check = value_check(
        &format!("property.product_factorization{tag}"),
        vec![max_factor_err],
        vec![0.0],
        1e-12,
    );
    check.seed = Some(seeds.start);
    out.push(check);

    out
}

/// Fixed seed for the random round-trip half of the embedding checks.
pub const EMBEDDING_CHECK_SEED: u64 = 7;

/// The whole suite: named checks plus the property suite over
/// `0..seed_count`.
pub fn run_all(seed_count: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(check_ghz());
    out.extend(check_werner_family(&default_x_grid()));
    out.extend(check_embeddings(EMBEDDING_CHECK_SEED));
    out.extend(check_molecules(&default_molecule_grid()));
    out.extend(check_upb());
    out.extend(run_property_suite(0..seed_count));
    out
}

/// Aggregate counts for machine-readable output.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

pub fn summarize(checks: Vec<CheckResult>) -> SuiteSummary {
    let total = checks.len();
    let passed = checks.iter().filter(|c| c.passed).count();
    SuiteSummary {
        total,
        passed,
        failed: total - passed,
        checks,
    }
}
