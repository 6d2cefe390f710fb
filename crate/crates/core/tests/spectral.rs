mod common;

use common::rel_err;
use hyperdirac::specfun::{hyp2f1, jacobi_phi};
use hyperdirac::spectral::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn geo(n: u32) -> Geometry {
    Geometry::new(n).unwrap()
}

#[test]
fn raw_and_simplified_agree() {
    for n in 2..=9 {
        let g = geo(n);
        for k in 0..50 {
            let r = 0.05 * 1.18f64.powi(k);
            let raw = c_function_raw(&g, 2.0 * r).unwrap();
            let simp = c_function_simplified(&g, r);
            assert!(rel_err(raw, simp) < 1e-12, "n={n} r={r}");
        }
    }
}

#[test]
fn raw_spec_examples() {
    let g3 = geo(3);
    let v = c_function_raw(&g3, 2.0).unwrap();
    assert!(rel_err(v, c_function_simplified(&g3, 1.0)) < 1e-12);
    let g4 = geo(4);
    let a = c_function_raw(&g4, -1.7).unwrap();
    let b = c_function_raw(&g4, 1.7).unwrap();
    assert!((a - b.conj()).norm() < 1e-12 * b.norm());
    assert!(c_function_raw(&g4, 0.0).is_err());
    let g2 = geo(2);
    let v = c_function_raw(&g2, 1.0).unwrap();
    assert!(v.norm().is_finite() && v.norm() > 0.0);
}

#[test]
fn simplified_matches_hand_reduction() {
    // n = 3: c(2r) = 2 Gamma(ir + 1/2) / Gamma(ir + 3/2) = 2 / (ir + 1/2)
    let g = geo(3);
    for &r in &[0.1, 1.0, 7.0] {
        let want = c(2.0, 0.0) / c(0.5, r);
        assert!(rel_err(c_function_simplified(&g, r), want) < 1e-13);
    }
    assert!((c_function_simplified(&g, 1.0) - c(0.8, -1.6)).norm() < 1e-13);
}

#[test]
fn c_asymptotics() {
    for n in 2..=9 {
        let g = geo(n);
        let r = 1000.0;
        let ratio = 1.0 / (c_function_simplified(&g, r).norm() * r.powf((n as f64 - 1.0) / 2.0));
        let limit = c_asymptotic_constant(&g);
        assert!((ratio / limit - 1.0).abs() < 0.01, "n={n}: {ratio} vs {limit}");
    }
}

fn fd_derivative<F: Fn(f64) -> Complex64>(f: &F, r: f64, k: u32) -> Complex64 {
    let h = 1e-3 * r.max(1.0);
    match k {
        0 => f(r),
        1 => (f(r + h) - f(r - h)) / (2.0 * h),
        _ => (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h),
    }
}

#[test]
fn c_symbol_derivative_bounds() {
    for n in 2..=6 {
        let g = geo(n);
        let sym = |r: f64| 1.0 / (r * c_function_simplified(&g, r));
        for k in 0..3u32 {
            let bound = |r: f64| (1.0 + r).powf((n as f64 - 3.0) / 2.0 - k as f64);
            let ratio = |r: f64| fd_derivative(&sym, r, k).norm() / bound(r);
            let lo = (1..=50).map(|i| ratio(i as f64)).fold(0.0, f64::max);
            let hi = (50..=100).map(|i| ratio(i as f64)).fold(0.0, f64::max);
            assert!(hi <= 1.05 * lo, "n={n} k={k}: constant {lo} fails further out ({hi})");
        }
    }
}

#[test]
fn mu_values_and_growth() {
    assert!((plancherel_density(&geo(3), 0.0) - 0.019_894_367_886_486_9).abs() < 1e-15);
    assert!((plancherel_density(&geo(2), 0.0) - 0.159_154_943_091_895_3).abs() < 1e-15);
    for n in 2..=5 {
        let g = geo(n);
        let ratio = |r: f64| plancherel_density(&g, r) / (1.0 + r).powi(n as i32 - 1);
        let cst = (0..=1000).map(|i| ratio(i as f64)).fold(0.0, f64::max);
        assert!(cst.is_finite());
        // bounded: the ratio settles instead of growing
        assert!(ratio(1000.0) <= cst && ratio(1000.0) >= 0.5 * ratio(500.0));
    }
}

#[test]
fn mu_symbol_derivatives() {
    for n in 2..=5 {
        let g = geo(n);
        let mu = |r: f64| c(plancherel_density(&g, r), 0.0);
        for k in 0..3u32 {
            let ratio = |r: f64| fd_derivative(&mu, r, k).norm() / (1.0 + r).powf(n as f64 - 1.0 - k as f64);
            let lo = (1..=100).map(|i| ratio(i as f64)).fold(0.0, f64::max);
            let hi = (100..=200).map(|i| ratio(i as f64)).fold(0.0, f64::max);
            assert!(hi <= 1.05 * lo, "n={n} k={k}");
        }
    }
}

#[test]
fn mu_c_constancy() {
    let m3 = mu_c_consistency(&geo(3), &[0.1, 1.0, 10.0, 50.0]).unwrap();
    assert!(m3.spread < 1e-10);
    let m2 = mu_c_consistency(&geo(2), &[0.5, 5.0, 50.0]).unwrap();
    assert!(m2.spread < 1e-10);
    println!("mu |c(2r)|^2: n=3 -> {}, n=2 -> {}", m3.constant, m2.constant);
    for n in 2..=9 {
        let grid: Vec<f64> = (1..40).map(|i| 0.07 * i as f64 * i as f64).collect();
        let m = mu_c_consistency(&geo(n), &grid).unwrap();
        assert!(m.spread < 1e-10, "n={n}: spread {}", m.spread);
    }
    assert!(mu_c_consistency(&geo(3), &[]).is_err());
    assert!(mu_c_consistency(&geo(3), &[0.0]).is_err());
}

#[test]
fn hc_spec_examples() {
    let g = geo(3);
    for &r in &[0.0, 0.7, 4.0] {
        let h = hc_coefficients(&g, r, 5);
        assert_eq!(h.values[0], c(1.0, 0.0));
        let want = -(c(3.0, -r)) / c(1.0, -r);
        assert!((h.values[1] - want).norm() < 1e-14);
        assert!((h.literal[1] - want).norm() < 1e-14);
    }
}

#[test]
fn hc_split_sums_to_values() {
    for n in 2..=9 {
        let g = geo(n);
        for &r in &[0.3, 2.0, 40.0] {
            let h = hc_coefficients(&g, r, 60);
            for m in 0..=60 {
                let (cm, t) = h.split[m];
                assert!((cm + t - h.values[m]).norm() <= 1e-12 * h.values[m].norm().max(1.0));
                let (pc, pt) = h.literal_split[m];
                assert!((pc + pt - h.literal[m]).norm() <= 1e-12 * h.literal[m].norm().max(1.0));
            }
        }
    }
}

fn binom(p: Complex64, k: usize) -> Complex64 {
    let mut b = c(1.0, 0.0);
    for i in 0..k {
        b *= (p - i as f64) / (i as f64 + 1.0);
    }
    b
}

/// Coefficients from the closed form
/// `Phi = (2 cosh t)^{i l - rho} 2F1((rho - i l)/2, (alpha - beta + 1 - i l)/2; 1 - i l; cosh^{-2} t)`
/// expanded in `x = e^{-2t}`.
/// Returns each coefficient with the magnitude sum of its terms (cancellation scale).
fn closed_form_coefficients(n: u32, r: f64, m: usize) -> Vec<(Complex64, f64)> {
    let nf = n as f64;
    let (alpha, beta, rho) = (nf / 2.0 - 1.0, nf / 2.0, nf);
    let il = c(0.0, r);
    let a = (rho - il) / 2.0;
    let b = (alpha - beta + 1.0 - il) / 2.0;
    let cc = 1.0 - il;
    let mut aj = vec![c(1.0, 0.0)];
    for j in 0..m {
        let jf = j as f64;
        let next = aj[j] * (a + jf) * (b + jf) / ((cc + jf) * (jf + 1.0)) * 4.0;
        aj.push(next);
    }
    (0..=m)
        .map(|k| {
            let terms: Vec<Complex64> = (0..=k).map(|j| aj[j] * binom(il - rho - 2.0 * j as f64, k - j)).collect();
            (terms.iter().sum(), terms.iter().map(|t| t.norm()).sum())
        })
        .collect()
}

#[test]
fn hc_coefficients_match_closed_form_expansion() {
    for n in 2..=7 {
        let g = geo(n);
        for &r in &[0.5, 1.0, 3.0, 12.0] {
            let h = hc_coefficients(&g, r, 25);
            let want = closed_form_coefficients(n, r, 25);
            for m in 0..=25 {
                let (w, scale) = want[m];
                let tol = 1e-9 * w.norm().max(1.0) + 1e-14 * scale;
                assert!((h.values[m] - w).norm() <= tol, "n={n} r={r} m={m}: {} vs {}", h.values[m], w);
            }
        }
    }
}

#[test]
fn limit_coefficients_match_generating_function() {
    // sum C_m q^m = (1-q)^{-(n-1)/2} (1+q)^{-(n+1)/2}
    for n in 2..=9 {
        let g = geo(n);
        let cl = hc_limit_coefficients(&g, 40);
        let nf = n as f64;
        for m in 0..=40 {
            let want: f64 = (0..=m)
                .map(|i| {
                    let a = binom(c(-(nf - 1.0) / 2.0, 0.0), i).re * (-1f64).powi(i as i32);
                    let b = binom(c(-(nf + 1.0) / 2.0, 0.0), m - i).re;
                    a * b
                })
                .sum();
            assert!((cl[m] - want).abs() <= 1e-10 * want.abs().max(1.0), "n={n} m={m}");
        }
        // and the operative coefficients approach them for large r
        let h = hc_coefficients(&g, 1e6, 10);
        for m in 0..=10 {
            assert!((h.values[m] - cl[m]).norm() < 1e-4 * cl[m].abs().max(1.0));
        }
    }
}

#[test]
fn growth_exponents_reported() {
    let grid: Vec<f64> = (0..12).map(|i| 1.0 * 1.52f64.powi(i)).collect();
    for n in 2..=5 {
        let g = geo(n);
        let (nu1, nu2) = hc_growth_exponents(&g, 200, &grid);
        println!("n={n}: nu1 = {nu1:.3}, nu2 = {nu2:.3}");
        assert!(nu1.is_finite() && nu2.is_finite());
        // the q = -1 singularity of the generating function dominates: m^{(n-1)/2}
        assert!((nu1 - (n as f64 - 1.0) / 2.0).abs() < 0.1, "n={n}: nu1 = {nu1}");
    }
}

#[test]
fn hc_series_examples() {
    let g = geo(2);
    let s = 1.3;
    let v = hc_series(&g, 0.8, s, 0).unwrap();
    let want = (c(-2.0, 0.8) * s).exp();
    assert!((v.value - want).norm() < 1e-15);
    // reconstruction at n = 2, r = 1, s = 4
    let phi = jacobi_phi(hyperdirac::specfun::JacobiParams::spinor(2), 1.0, 4.0).unwrap();
    let rec = hc_reconstruct(&g, 1.0, 4.0, 40).unwrap();
    assert!(rel_err(rec, phi) < 1e-8);
    // geometric tail
    let g3 = geo(3);
    let a = hc_series(&g3, 1.0, 10.0, 10).unwrap();
    let b = hc_series(&g3, 1.0, 10.0, 40).unwrap();
    assert!(rel_err(a.value, b.value) < 1e-10);
    assert!(!b.truncated);
    let short = hc_series(&g3, 1.0, 0.3, 2).unwrap();
    assert!(short.truncated);
    assert!(hc_series(&g3, 1.0, 0.0, 5).is_err());
}

#[test]
fn expansion_reproduces_jacobi_function() {
    let mut worst_literal: f64 = 0.0;
    for n in 2..=5 {
        let g = geo(n);
        for &r in &[0.5, 1.0, 3.0] {
            for &s in &[2.0, 3.0, 5.0, 8.0] {
                let phi = jacobi_phi(hyperdirac::specfun::JacobiParams::spinor(n), r, s).unwrap();
                let rec = hc_reconstruct(&g, r, s, 40).unwrap();
                assert!(rel_err(rec, phi) < 1e-8, "n={n} r={r} s={s}");
                let literal = hc_reconstruct_literal(&g, r, s, 40).unwrap();
                worst_literal = worst_literal.max(rel_err(literal, phi));
            }
        }
    }
    println!("literal recurrence: worst relative error {worst_literal:.3e}");
    assert!(worst_literal > 1e-6);
}

#[test]
fn jacobi_phi_matches_raw_hypergeometric_at_moderate_s() {
    let g = geo(3);
    let (r, s) = (1.0f64, 2.0f64);
    let a = c(1.5, r / 2.0);
    let b = c(1.5, -r / 2.0);
    let direct = hyp2f1(a, b, c(1.5, 0.0), -(s.sinh().powi(2))).unwrap();
    let rec = hc_reconstruct(&g, r, s, 40).unwrap();
    assert!(rel_err(rec, direct) < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn raw_simplified_property(n in 2u32..=9, r in 0.01f64..200.0) {
        let g = geo(n);
        let raw = c_function_raw(&g, 2.0 * r).unwrap();
        prop_assert!(rel_err(raw, c_function_simplified(&g, r)) < 1e-12);
    }

    #[test]
    fn mu_even_nonnegative(n in 2u32..=9, r in 0.0f64..1000.0) {
        let g = geo(n);
        let a = plancherel_density(&g, r);
        prop_assert!(a >= 0.0);
        prop_assert_eq!(a, plancherel_density(&g, -r));
    }

    #[test]
    fn split_property(n in 2u32..=9, r in 0.01f64..100.0) {
        let h = hc_coefficients(&geo(n), r, 30);
        for m in 0..=30 {
            let (cm, t) = h.split[m];
            prop_assert!((cm + t - h.values[m]).norm() <= 1e-12 * h.values[m].norm().max(1.0));
        }
    }
}
