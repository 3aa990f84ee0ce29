//! Independent spectral oracles for the test suite.
#![allow(dead_code)] // shared between test targets; not every target uses every oracle
//!
//! Nothing here shares code with the library's Jacobi eigensolver. For
//! dimensions up to 4 the eigenvalues are recovered as the real roots of
//! the characteristic polynomial (power sums -> Newton's identities ->
//! derivative-interlacing bisection). For dimension 8 they come from
//! shifted power iteration with Hotelling deflation. A complex LU
//! determinant backs the spectrum/determinant consistency checks.

use num_complex::Complex64;
use tripartite_ppt::SquareMatrix;

/// Relative threshold below which a polynomial value at a critical point
/// counts as an exact zero (a multiple root).
const POLY_ZERO_EPS: f64 = 1e-12;

/// Monic characteristic polynomial coefficients of a Hermitian matrix,
/// `coeffs[i]` multiplying `x^i`, via traces of powers and Newton's
/// identities. Hermitian input makes every coefficient real.
pub fn char_poly(m: &SquareMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut power_sums = Vec::with_capacity(n);
    let mut acc = m.clone();
    for _ in 0..n {
        power_sums.push(acc.trace().re);
        acc = acc.matmul(m);
    }
    // e_k elementary symmetric functions: k e_k = sum_i (-1)^(i-1) e_{k-i} p_i.
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for k in 1..=n {
        let mut s = 0.0;
        for i in 1..=k {
            let sign = if (i - 1) % 2 == 0 { 1.0 } else { -1.0 };
            s += sign * e[k - i] * power_sums[i - 1];
        }
        e[k] = s / k as f64;
    }
    let mut coeffs = vec![0.0; n + 1];
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[n - k] = sign * e[k];
    }
    coeffs
}

fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Magnitude scale of the evaluation at `x`, for zero thresholds.
fn eval_scale(coeffs: &[f64], x: f64) -> f64 {
    coeffs
        .iter()
        .rev()
        .fold(0.0f64, |acc, c| acc * x.abs() + c.abs())
        .max(1e-300)
}

fn derivative_monic(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    let lead = n as f64;
    (1..=n).map(|i| coeffs[i] * i as f64 / lead).collect()
}

fn bisect(coeffs: &[f64], mut lo: f64, mut hi: f64, mut f_lo: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = eval(coeffs, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn newton_polish(coeffs: &[f64], deriv: &[f64], x0: f64, lo: f64, hi: f64) -> f64 {
    let n = coeffs.len() - 1;
    let lead = n as f64;
    let mut x = x0;
    for _ in 0..20 {
        let f = eval(coeffs, x);
        let d = eval(deriv, x) * lead;
        if d == 0.0 {
            break;
        }
        let next = x - f / d;
        if !(lo..=hi).contains(&next) {
            break;
        }
        if (next - x).abs() <= f64::EPSILON * x.abs() {
            return next;
        }
        x = next;
    }
    x
}

/// All real roots (with multiplicity) of a monic real-rooted polynomial.
///
/// Critical points interlace the roots, so between consecutive distinct
/// critical points the polynomial is strictly monotonic: a sign change
/// brackets exactly one simple root. A critical point where the
/// polynomial itself (numerically) vanishes is a multiple root carrying
/// one more than its multiplicity in the derivative. Returns an error if
/// the accounting does not produce exactly `degree` roots.
pub fn real_roots_monic(coeffs: &[f64]) -> Result<Vec<f64>, String> {
    let n = coeffs.len() - 1;
    assert!(n >= 1);
    if n == 1 {
        return Ok(vec![-coeffs[0]]);
    }
    if n == 2 {
        let b = coeffs[1];
        let c = coeffs[0];
        // Real-rooted by assumption; clamp the discriminant at zero.
        let disc = (b * b - 4.0 * c).max(0.0).sqrt();
        let q = -0.5 * (b + disc.copysign(if b == 0.0 { 1.0 } else { b }));
        let (r1, r2) = if q == 0.0 {
            (-0.5 * b, -0.5 * b)
        } else {
            (q, c / q)
        };
        let mut out = vec![r1, r2];
        out.sort_by(f64::total_cmp);
        return Ok(out);
    }

    let deriv = derivative_monic(coeffs);
    let crit = real_roots_monic(&deriv)?;

    // Group equal (or numerically indistinguishable) critical points.
    let mut distinct: Vec<(f64, usize)> = Vec::new();
    for &c in &crit {
        match distinct.last_mut() {
            Some((prev, mult)) if (c - *prev).abs() <= 1e-8 * (1.0 + c.abs()) => *mult += 1,
            _ => distinct.push((c, 1)),
        }
    }

    let bound = 1.0 + coeffs[..n].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut roots: Vec<f64> = Vec::new();

    // Points of the interlacing partition. `true` marks a critical point
    // at which p vanishes: those are roots themselves and make adjacent
    // sign checks meaningless.
    let mut points: Vec<(f64, bool)> = vec![(-bound, false)];
    for &(c, mult) in &distinct {
        let is_root = eval(coeffs, c).abs() <= POLY_ZERO_EPS * eval_scale(coeffs, c);
        if is_root {
            roots.extend(std::iter::repeat_n(c, mult + 1));
        }
        points.push((c, is_root));
    }
    points.push((bound, false));

    for w in points.windows(2) {
        let (a, a_zero) = w[0];
        let (b, b_zero) = w[1];
        if a_zero || b_zero {
            continue;
        }
        let fa = eval(coeffs, a);
        let fb = eval(coeffs, b);
        if (fa > 0.0) != (fb > 0.0) {
            let raw = bisect(coeffs, a, b, fa);
            roots.push(newton_polish(coeffs, &deriv, raw, a, b));
        }
    }

    if roots.len() != n {
        return Err(format!(
            "expected {n} real roots, found {} (coeffs {coeffs:?})",
            roots.len()
        ));
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// Eigenvalues of a Hermitian matrix of dimension <= 4 via its
/// characteristic polynomial, ascending.
pub fn eigenvalues_char_poly(m: &SquareMatrix) -> Vec<f64> {
    assert!(m.dim() <= 4, "characteristic-polynomial oracle covers dim <= 4");
    real_roots_monic(&char_poly(m)).expect("Hermitian characteristic polynomial is real-rooted")
}

fn scaled_vector(v: &[Complex64], factor: f64) -> Vec<Complex64> {
    v.iter().map(|z| z * factor).collect()
}

fn vector_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn matvec(m: &SquareMatrix, v: &[Complex64]) -> Vec<Complex64> {
    let n = m.dim();
    (0..n)
        .map(|r| (0..n).map(|c| m.get(r, c) * v[c]).sum())
        .collect()
}

/// Eigenvalues of a Hermitian matrix by repeated deflation, ascending:
/// shift to positive definite, find the dominant eigenpair by power
/// iteration, subtract it, repeat. Deterministic start vectors.
pub fn eigenvalues_deflation(m: &SquareMatrix) -> Vec<f64> {
    let n = m.dim();
    let gersh = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let shift = gersh + 1.0;
    let mut d = m.add(&SquareMatrix::identity(n).scale(shift));

    // Tiny xorshift for reproducible start vectors, unrelated to the
    // crate's samplers.
    let mut rng_state = 0x9e3779b97f4a7c15u64;
    let mut next_unit = || {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        (rng_state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };

    let mut eigs = Vec::with_capacity(n);
    for _ in 0..n {
        let mut v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(next_unit(), next_unit()))
            .collect();
        let nv = vector_norm(&v);
        v = scaled_vector(&v, 1.0 / nv);
        let mut theta = 0.0;
        for _ in 0..300_000 {
            let w = matvec(&d, &v);
            let nw = vector_norm(&w);
            if nw < 1e-200 {
                // Start vector fell into the deflated span; reseed.
                v = (0..n).map(|_| Complex64::new(next_unit(), next_unit())).collect();
                let nv = vector_norm(&v);
                v = scaled_vector(&v, 1.0 / nv);
                continue;
            }
            let next = scaled_vector(&w, 1.0 / nw);
            theta = next
                .iter()
                .zip(matvec(&d, &next))
                .map(|(a, b)| (a.conj() * b).re)
                .sum();
            let residual: f64 = matvec(&d, &next)
                .iter()
                .zip(&next)
                .map(|(dw, vi)| (dw - vi * theta).norm_sqr())
                .sum::<f64>()
                .sqrt();
            v = next;
            if residual <= 1e-13 * (1.0 + theta.abs()) {
                break;
            }
        }
        eigs.push(theta - shift);
        // Hotelling deflation: d <- d - theta v v^dagger.
        let mut deflated = d.clone();
        for r in 0..n {
            for c in 0..n {
                let cur = deflated.get(r, c);
                deflated.set(r, c, cur - v[r] * v[c].conj() * theta);
            }
        }
        d = deflated;
    }
    eigs.sort_by(f64::total_cmp);
    eigs
}

/// Determinant by complex LU with partial pivoting.
pub fn determinant(m: &SquareMatrix) -> Complex64 {
    let n = m.dim();
    let mut a: Vec<Vec<Complex64>> = (0..n)
        .map(|r| (0..n).map(|c| m.get(r, c)).collect())
        .collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| a[r1][col].norm().total_cmp(&a[r2][col].norm()))
            .unwrap();
        if a[pivot_row][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot_row != col {
            a.swap(pivot_row, col);
            det = -det;
        }
        det *= a[col][col];
        for row in (col + 1)..n {
            let factor = a[row][col] / a[col][col];
            let (upper, lower) = a.split_at_mut(row);
            let pivot = &upper[col];
            for (dst, src) in lower[0].iter_mut().zip(pivot).skip(col) {
                *dst -= factor * src;
            }
        }
    }
    det
}

/// Deterministic dense Hermitian matrix with entries of order one,
/// generated by a local xorshift so the oracle inputs do not depend on
/// the crate's samplers.
pub fn random_hermitian(seed: u64, dim: usize) -> SquareMatrix {
    let mut state = seed.wrapping_mul(0x2545f4914f6cdd1d).wrapping_add(0x9e3779b97f4a7c15);
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    };
    let mut m = SquareMatrix::zeros(dim);
    for r in 0..dim {
        m.set(r, r, Complex64::new(next(), 0.0));
        for c in (r + 1)..dim {
            let z = Complex64::new(next(), next());
            m.set(r, c, z);
            m.set(c, r, z.conj());
        }
    }
    m
}
