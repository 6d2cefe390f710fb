mod common;

use common::{dd::hyp2f1_dd, frac_seq, hyp_tuple, rel_err};
use hyperdirac::specfun::{gamma, hyp2f1, jacobi_phi, jacobi_phi_grid, log_gamma, JacobiParams};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

// mpmath, 40 digits
const GAMMA_REF: [(f64, f64, f64, f64); 7] = [
    (0.3, 0.2, 1.9803581728234425, -1.4145760083733033),
    (7.5, -3.0, 940.09944077591742, 349.7066140084973),
    (-2.7, 0.4, -0.42601364816873743, 0.036482419059879669),
    (-0.5, 14.0, -4.0152533067379277e-11, 3.0389041024101271e-11),
    (60.0, 70.0, -9.5391723597365527e+64, 4.9555272335732839e+64),
    (-40.2, 3.0, -2.8998952330538887e-52, 1.5933492592611966e-52),
    (1.5, -90.0, -6.6039461046501576e-60, -6.1804454357517507e-60),
];

#[test]
fn gamma_matches_reference() {
    for &(re, im, gr, gi) in &GAMMA_REF {
        let g = gamma(c(re, im)).unwrap();
        assert!(rel_err(g, c(gr, gi)) < 1e-12, "z = {re}+{im}i: {g}");
    }
}

#[test]
fn gamma_of_integers() {
    let mut f = 1.0f64;
    for k in 1..30 {
        let lg = log_gamma(c(k as f64, 0.0)).unwrap();
        assert!((lg.re - f.ln()).abs() < 1e-12 * f.ln().max(1.0), "k = {k}");
        assert!(lg.im.abs() < 1e-14);
        f *= k as f64;
    }
}

#[test]
fn duplication_on_complex_grid() {
    let ln_sqrt_pi = 0.5 * std::f64::consts::PI.ln();
    let ln2 = std::f64::consts::LN_2;
    for k in 0..100 {
        let z = c(0.05 + 30.0 * frac_seq(k, 0), -25.0 + 50.0 * frac_seq(k, 1));
        let r = log_gamma(2.0 * z).unwrap() - (2.0 * z - 1.0) * ln2 + ln_sqrt_pi
            - log_gamma(z).unwrap()
            - log_gamma(z + 0.5).unwrap();
        assert!(r.norm() < 1e-12, "z = {z}: residual {r}");
    }
}

#[test]
fn duplication_spec_point() {
    let z = c(1.3, 0.7);
    let ln2 = std::f64::consts::LN_2;
    let r = log_gamma(2.0 * z).unwrap() - (2.0 * z - 1.0) * ln2 + 0.5 * std::f64::consts::PI.ln()
        - log_gamma(z).unwrap()
        - log_gamma(z + 0.5).unwrap();
    assert!(r.norm() < 1e-13);
}

#[test]
fn recurrence_on_complex_grid() {
    for k in 0..100 {
        let z = c(0.5 + 19.5 * frac_seq(k, 2), -20.0 + 40.0 * frac_seq(k, 3));
        let r = log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap() - z.ln();
        assert!(r.norm() < 1e-12, "z = {z}");
    }
}

const HYP_REF: [(f64, f64, f64, f64, f64, f64, f64, f64); 6] = [
    (1.5, -0.5, 1.5, 0.5, 1.5, -13.154116418008243315, 0.0049490635535248386, 0.0),
    (0.25, 0.0, 1.75, 0.0, 2.5, -3.0, 0.7620634755325443, 0.0),
    (2.0, 3.0, 2.0, -3.0, 0.5, -40.0, -0.00056229094178989619, 0.0),
    (-1.3, 0.2, 0.7, 0.0, 1.1, -0.25, 1.21212416246479, -0.036801770033053142),
    (3.0, 0.0, 4.5, 0.0, 5.0, -49.5, 1.3620978700522553e-5, 0.0),
    (0.5, 10.0, 0.5, -10.0, 1.0, -0.01, 0.22553462953234894, 0.0),
];

#[test]
fn hyp2f1_matches_reference() {
    for &(ar, ai, br, bi, cc, z, vr, vi) in &HYP_REF {
        let v = hyp2f1(c(ar, ai), c(br, bi), c(cc, 0.0), z).unwrap();
        assert!(rel_err(v, c(vr, vi)) < 1e-10, "{ar} {ai} {z}: {v}");
    }
}

#[test]
fn hyp2f1_spec_example_against_dd_series() {
    let (n, r) = (3.0, 1.0);
    let a = c(n / 2.0, -r / 2.0);
    let b = c(n / 2.0, r / 2.0);
    let cc = c(n / 2.0, 0.0);
    let z = -(2.0f64.sinh().powi(2));
    let got = hyp2f1(a, b, cc, z).unwrap();
    let want = hyp2f1_dd(a, b, cc, z);
    assert!(rel_err(got, want) < 1e-9);
}

#[test]
fn hyp2f1_against_dd_series_on_200_tuples() {
    for k in 0..200 {
        let (a, b, cc, z) = hyp_tuple(k);
        let got = hyp2f1(a, b, cc, z).unwrap();
        let want = hyp2f1_dd(a, b, cc, z);
        assert!(rel_err(got, want) < 1e-9, "tuple {k}: {a} {b} {cc} {z}: {got} vs {want}");
    }
}

// mpmath, 40 digits: (alpha, beta, lambda, t, value)
const JACOBI_REF: [(f64, f64, f64, f64, f64); 11] = [
    (0.5, 1.5, 2.0, 1.0, 0.10732776860816819),
    (0.5, 1.5, 0.3, 10.0, -6.5084859596812468e-13),
    (0.5, 1.5, 40.0, 0.1, -0.18729471769764471),
    (0.5, 1.5, 5.0, 4.0, 9.3975588687413085e-6),
    (1.5, -0.5, 0.0, 25.0, 5.5547995621360832e-20),
    (2.5, 1.5, 1.2, 3.0, 1.7391442445159959e-5),
    (0.0, 1.0, 1.0, 4.0, -0.00096213299752532545),
    (1.5, 2.5, 700.0, 0.5, 4.3836087079947362e-6),
    (1.0, 2.0, 0.05, 0.7, 0.40282778063356797),
    (0.5, -0.5, 0.0, 30.0, 5.6145737813041048e-12),
    (1.5, 2.5, 200.0, 0.03, -0.083747343744143437),
];

#[test]
fn jacobi_matches_reference() {
    for &(al, be, l, t, v) in &JACOBI_REF {
        let p = JacobiParams::new(al, be).unwrap();
        let got = jacobi_phi(p, l, t).unwrap();
        assert!((got.re - v).abs() < 1e-9 * v.abs(), "({al},{be}) l={l} t={t}: {} vs {v}", got.re);
        assert_eq!(got.im, 0.0);
    }
}

#[test]
fn jacobi_grid_matches_pointwise() {
    let p = JacobiParams::spinor(4);
    let ts: Vec<f64> = (0..60).map(|i| i as f64 * 0.25).collect();
    for &l in &[0.0, 0.4, 3.0, 25.0] {
        let g = jacobi_phi_grid(p, l, &ts).unwrap();
        for (t, v) in ts.iter().zip(g) {
            let w = jacobi_phi(p, l, *t).unwrap().re;
            assert!((v - w).abs() <= 1e-10 * w.abs().max(1e-300), "l={l} t={t}");
        }
    }
}

#[test]
fn jacobi_spec_examples() {
    let p = JacobiParams::spinor(3);
    let a = jacobi_phi(p, 3.0, 2.0).unwrap();
    let b = jacobi_phi(p, -3.0, 2.0).unwrap();
    assert!((a - b).norm() < 1e-12);
    assert!(JacobiParams::new(-1.0, 0.0).is_err());
    assert!(jacobi_phi(p, 1.0, -0.1).is_err());
}

#[test]
fn jacobi_even_and_normalized_on_parameter_grid() {
    for k in 0..20 {
        let p = JacobiParams::new(-0.5 + 4.0 * frac_seq(k, 0), -0.5 + 4.0 * frac_seq(k, 1)).unwrap();
        let l = 10.0 * frac_seq(k, 2);
        let t = 6.0 * frac_seq(k, 3);
        assert_eq!(jacobi_phi(p, l, 0.0).unwrap(), c(1.0, 0.0));
        let a = jacobi_phi(p, l, t).unwrap();
        let b = jacobi_phi(p, -l, t).unwrap();
        assert!((a - b).norm() <= 1e-12 * a.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn hyp2f1_matches_dd_oracle(
        ar in -1.5f64..3.5, ai in -4.0f64..4.0,
        br in -1.0f64..4.0, bi in -4.0f64..4.0,
        cc in 0.3f64..5.3, z in -50.0f64..0.0,
    ) {
        let (a, b, cc) = (c(ar, ai), c(br, bi), c(cc, 0.0));
        let got = hyp2f1(a, b, cc, z).unwrap();
        let want = hyp2f1_dd(a, b, cc, z);
        prop_assert!(rel_err(got, want) < 1e-9);
    }

    #[test]
    fn log_gamma_recurrence(re in 0.5f64..20.0, im in -30.0f64..30.0) {
        let z = c(re, im);
        let r = log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap() - z.ln();
        prop_assert!(r.norm() < 1e-12);
    }

    #[test]
    fn jacobi_even_in_lambda(n in 2u32..10, l in 0.0f64..60.0, t in 0.0f64..12.0) {
        let p = JacobiParams::spinor(n);
        let a = jacobi_phi(p, l, t).unwrap();
        let b = jacobi_phi(p, -l, t).unwrap();
        prop_assert!((a - b).norm() <= 1e-12 * a.norm().max(1e-300));
    }
}
