//! Acceptance suite: the contract this crate is built against, one test
//! per criterion, each printing a PASS line (visible with
//! `cargo test --test acceptance -- --nocapture`).

#[path = "support/oracle.rs"]
mod oracle;

use num_complex::Complex64;
use tripartite_ppt::criterion::{
    entanglement_criterion, pure_pair_decomposition, reduce, ReductionKind, DEFAULT_TOLERANCE,
};
use tripartite_ppt::linalg::{hermitian_eigenvalues, is_density_matrix, kron, SquareMatrix};
use tripartite_ppt::states::{
    embed_bipartite, ghz, molecule_state, product_pure, pure_to_density, random_density,
    random_product_state, random_pure_state, random_separable, upb_product_basis, upb_state,
    werner_bipartite, werner_embedded,
};
use tripartite_ppt::verify::default_molecule_grid;

const PAIRS: [ReductionKind; 3] = [ReductionKind::AB, ReductionKind::AC, ReductionKind::BC];

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

fn assert_spectra_close(observed: &[f64], expected: &[f64], tol: f64, what: &str) {
    assert_eq!(observed.len(), expected.len(), "{what}: length mismatch");
    for (o, e) in observed.iter().zip(expected) {
        assert!(
            (o - e).abs() <= tol,
            "{what}: observed {o} vs expected {e} beyond {tol:e}\n  observed {observed:?}\n  expected {expected:?}"
        );
    }
}

#[test]
fn acceptance_1_ghz() {
    let rho = ghz();
    let report = entanglement_criterion(&rho, DEFAULT_TOLERANCE);

    for kind in PAIRS {
        let min = report.entry(kind).min_pt_eigenvalue;
        assert!(min >= -1e-10, "pair reduction {kind} has min PT eigenvalue {min}");
    }

    let cuts: Vec<_> = ReductionKind::CUTS
        .iter()
        .map(|&k| report.entry(k).reduction.clone())
        .collect();
    for a in 0..3 {
        for b in (a + 1)..3 {
            let diff = cuts[a].matrix().max_abs_diff(cuts[b].matrix());
            assert!(diff <= 1e-14, "cut reductions differ by {diff}");
        }
    }

    for (kind, cut) in ReductionKind::CUTS.iter().zip(&cuts) {
        let min = report.entry(*kind).min_pt_eigenvalue;
        assert!((min + 0.5).abs() <= 1e-10, "cut {kind} min PT eigenvalue {min}");
        // Same value through the independent characteristic-polynomial oracle.
        let pt = cut.matrix().partial_transpose_second();
        let oracle_min = oracle::eigenvalues_char_poly(&pt)[0];
        assert!(
            (oracle_min + 0.5).abs() <= 1e-10,
            "oracle min PT eigenvalue {oracle_min}"
        );
    }

    assert_eq!(report.witnesses(), &ReductionKind::CUTS, "expected the three cuts as witnesses");
    println!("PASS criterion 1: GHZ pair reductions PPT, cut reductions equal with PT minimum -1/2, verdict entangled");
}

#[test]
fn acceptance_2_werner_family() {
    for i in 0..=10 {
        let x = i as f64 / 10.0;
        let rho = werner_embedded(x).unwrap();
        let red = reduce(&rho, ReductionKind::A_BC).unwrap();
        let spectrum = sorted(
            hermitian_eigenvalues(&red.matrix().partial_transpose_second()).unwrap(),
        );
        let expected = sorted(vec![
            0.25 * (1.0 - 3.0 * x),
            0.25 * (1.0 + x),
            0.25 * (1.0 + x),
            0.25 * (1.0 + x),
        ]);
        assert_spectra_close(&spectrum, &expected, 1e-10, &format!("PT spectrum at x={x}"));
    }

    for (x, should_flag) in [
        (1.0 / 3.0 - 1e-6, false),
        (1.0 / 3.0 + 1e-6, true),
    ] {
        let report = entanglement_criterion(&werner_embedded(x).unwrap(), DEFAULT_TOLERANCE);
        assert_eq!(
            report.is_entangled(),
            should_flag,
            "verdict at x = 1/3 {} 1e-6",
            if should_flag { "+" } else { "-" }
        );
    }
    println!("PASS criterion 2: Werner family PT spectra match the closed form; verdict flips exactly past x = 1/3");
}

#[test]
fn acceptance_3_embeddings() {
    let r = werner_bipartite(0.9).unwrap();
    let matching = [
        (1, ReductionKind::A_BC),
        (2, ReductionKind::B_CA),
        (3, ReductionKind::C_AB),
        (4, ReductionKind::AB),
        (5, ReductionKind::AC),
        (6, ReductionKind::BC),
    ];
    for (slot, kind) in matching {
        let rho = embed_bipartite(&r, slot).unwrap();
        let back = reduce(&rho, kind).unwrap();
        let diff = back.matrix().max_abs_diff(r.matrix());
        assert!(diff <= 1e-14, "slot {slot} round trip differs by {diff}");

        let report = entanglement_criterion(&rho, DEFAULT_TOLERANCE);
        assert!(report.is_entangled(), "slot {slot} verdict");
        assert!(
            report.witnesses().contains(&kind),
            "slot {slot} witnesses {:?} lack {kind}",
            report.witnesses()
        );
    }
    println!("PASS criterion 3: all six embeddings round-trip an entangled state and flag it with the matching witness");
}

#[test]
fn acceptance_4_molecule_states() {
    let grid = default_molecule_grid();
    assert!(!grid.is_empty());
    for p in &grid {
        let rho = molecule_state(p);
        let report = entanglement_criterion(&rho, DEFAULT_TOLERANCE);
        let pair_weights = [
            (ReductionKind::AB, p.p_ab),
            (ReductionKind::AC, p.p_ac),
            (ReductionKind::BC, p.p_bc),
        ];

        let mut any_negative = false;
        for (kind, weight) in pair_weights {
            let red = reduce(&rho, kind).unwrap();
            let m = red.matrix();
            for r in 0..4 {
                for c in 0..4 {
                    let allowed = (r == c && r < 3) || (r, c) == (1, 2) || (r, c) == (2, 1);
                    if !allowed {
                        assert!(
                            m.get(r, c).norm() <= 1e-14,
                            "{kind} entry ({r},{c}) = {} outside the sparsity pattern",
                            m.get(r, c)
                        );
                    }
                }
            }
            let coupling = Complex64::new(0.5 * weight, 0.0);
            assert!((m.get(1, 2) - coupling).norm() <= 1e-14, "{kind} coupling");
            assert!((m.get(2, 1) - coupling).norm() <= 1e-14, "{kind} coupling");

            // The PT spectrum is checked against the independent oracle,
            // not a closed form.
            let pt = m.partial_transpose_second();
            let jacobi = hermitian_eigenvalues(&pt).unwrap();
            let reference = oracle::eigenvalues_char_poly(&pt);
            assert_spectra_close(&jacobi, &reference, 1e-8, "molecule PT spectrum vs oracle");
            if jacobi[0] < -1e-10 {
                any_negative = true;
            }
            if weight > 0.0 {
                assert!(
                    jacobi[0] < -1e-10,
                    "pair {kind} with weight {weight} should be PT-negative, got {}",
                    jacobi[0]
                );
            }
        }
        assert!(any_negative, "no pair reduction witnessed p = {p:?}");
        assert!(report.is_entangled(), "verdict for p = {p:?}");
    }
    println!(
        "PASS criterion 4: {} molecule grid points keep the sparse pair shape and are flagged entangled",
        grid.len()
    );
}

#[test]
fn acceptance_5_upb_counterexample() {
    let basis = upb_product_basis();
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let dot: Complex64 = u.iter().zip(v).map(|(x, y)| x.conj() * y).sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            assert!(
                (dot - expected).norm() <= 1e-12,
                "Gram[{i}][{j}] = {dot} deviates from identity"
            );
        }
    }

    let report = entanglement_criterion(&upb_state(), DEFAULT_TOLERANCE);
    for entry in &report.reductions {
        assert!(
            entry.min_pt_eigenvalue >= -1e-10,
            "reduction {} has min PT eigenvalue {}",
            entry.kind,
            entry.min_pt_eigenvalue
        );
    }
    assert!(!report.is_entangled(), "UPB state must be inconclusive");
    println!("PASS criterion 5: UPB state passes all six PPT tests (verdict inconclusive) with an orthonormal product basis");
}

#[test]
fn acceptance_6_separable_soundness() {
    let mut flagged = 0u32;
    for seed in 0..1000u64 {
        let k = (seed % 8) as usize + 1;
        let (_, mixture) = random_separable(seed, k).unwrap();
        if entanglement_criterion(&mixture, DEFAULT_TOLERANCE).is_entangled() {
            flagged += 1;
        }
    }
    assert_eq!(flagged, 0, "{flagged} separable mixtures were flagged entangled");
    println!("PASS criterion 6: 1000 seeded separable mixtures, zero entangled verdicts");
}

#[test]
fn acceptance_7_reductions_are_density_matrices() {
    let mut valid = 0u32;
    for seed in 0..1000u64 {
        let rho = random_density(seed);
        for kind in ReductionKind::ALL {
            let red = reduce(&rho, kind).unwrap();
            let check = is_density_matrix(red.matrix(), 1e-10);
            assert!(
                check.passed(),
                "seed {seed}, kind {kind}: {}",
                check.failure().unwrap_or_default()
            );
            valid += 1;
        }
    }
    assert_eq!(valid, 6000);
    println!("PASS criterion 7: 6000 reductions of 1000 random states all validate as density matrices");
}

#[test]
fn acceptance_8_proof_machinery() {
    // Two-piece decomposition of pure-state cuts.
    for seed in 0..100u64 {
        let psi = random_pure_state(seed);
        let rho = pure_to_density(&psi);
        for kind in ReductionKind::CUTS {
            let d = pure_pair_decomposition(&psi, kind).unwrap();
            let weight_err = (d.weight_plain + d.weight_flipped - 1.0).abs();
            assert!(weight_err <= 1e-12, "seed {seed} {kind}: weights off by {weight_err}");
            let red = reduce(&rho, kind).unwrap();
            let recon_err = d.reconstruction().max_abs_diff(red.matrix());
            assert!(recon_err < 1e-12, "seed {seed} {kind}: reconstruction off by {recon_err}");
        }
    }

    // Factorization of cut reductions of product states, with the
    // off-diagonal damping gamma = 2 Re(z0 conj(z1)) of the leftover qubit.
    let qubit_density = |amps: &[Complex64; 2]| {
        let mut m = SquareMatrix::zeros(2);
        for r in 0..2 {
            for c in 0..2 {
                m.set(r, c, amps[r] * amps[c].conj());
            }
        }
        m
    };
    let damped = |amps: &[Complex64; 2], gamma: f64| {
        let mut m = SquareMatrix::zeros(2);
        m.set(0, 0, Complex64::new(amps[0].norm_sqr(), 0.0));
        m.set(1, 1, Complex64::new(amps[1].norm_sqr(), 0.0));
        m.set(0, 1, amps[0] * amps[1].conj() * gamma);
        m.set(1, 0, amps[0].conj() * amps[1] * gamma);
        m
    };
    let gamma = |amps: &[Complex64; 2]| 2.0 * (amps[0] * amps[1].conj()).re;

    for seed in 0..100u64 {
        let s = random_product_state(seed);
        let rho = product_pure(&s);
        let (a, b, c) = s.factors();
        let cases = [
            (ReductionKind::A_BC, qubit_density(a), damped(b, gamma(c))),
            (ReductionKind::B_CA, qubit_density(b), damped(c, gamma(a))),
            (ReductionKind::C_AB, qubit_density(c), damped(a, gamma(b))),
        ];
        for (kind, first, second) in cases {
            let red = reduce(&rho, kind).unwrap();
            let err = red.matrix().max_abs_diff(&kron(&first, &second));
            assert!(err < 1e-12, "seed {seed} {kind}: factorization off by {err}");
        }
    }
    println!("PASS criterion 8: cut decompositions reconstruct within 1e-12 and product states factorize within 1e-12");
}

#[test]
fn acceptance_9_numerics() {
    // Jacobi vs the characteristic-polynomial oracle on 500 dense
    // Hermitian 4x4 matrices.
    for seed in 0..500u64 {
        let m = oracle::random_hermitian(seed, 4);
        let jacobi = hermitian_eigenvalues(&m).unwrap();
        let reference = oracle::eigenvalues_char_poly(&m);
        assert_spectra_close(&jacobi, &reference, 1e-8, &format!("seed {seed}"));
    }

    // The partial transpose is an exact involution.
    for seed in 0..50u64 {
        let m = oracle::random_hermitian(1_000 + seed, 4);
        assert_eq!(m.partial_transpose_second().partial_transpose_second(), m);
    }
    println!("PASS criterion 9: Jacobi matches the oracle within 1e-8 on 500 matrices; partial transpose is an exact involution");
}
