#![allow(dead_code)]

pub mod dd;

use num_complex::Complex64;

/// Deterministic quasi-random point in [0, 1) (additive recurrence).
pub fn frac_seq(k: usize, dim: usize) -> f64 {
    const ALPHAS: [f64; 6] = [
        0.618_033_988_749_894_8,
        0.414_213_562_373_095_1,
        0.732_050_807_568_877_2,
        0.236_067_977_499_789_7,
        0.645_751_311_064_590_6,
        0.316_624_790_355_399_8,
    ];
    ((k as f64 + 1.0) * ALPHAS[dim % ALPHAS.len()]).fract()
}

/// Parameters `(a, b, c, z)` for hypergeometric comparisons: complex
/// `a`, `b`, real `c` in `[0.3, 5.3)` and `z` in `(-50, 0]`.
pub fn hyp_tuple(k: usize) -> (Complex64, Complex64, Complex64, f64) {
    let a = Complex64::new(-1.5 + 5.0 * frac_seq(k, 0), -4.0 + 8.0 * frac_seq(k, 1));
    let b = Complex64::new(-1.0 + 5.0 * frac_seq(k, 2), -4.0 + 8.0 * frac_seq(k, 3));
    let c = Complex64::new(0.3 + 5.0 * frac_seq(k, 4), 0.0);
    let z = -50.0 * frac_seq(k, 5);
    (a, b, c, z)
}

pub fn rel_err(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm()
}

/// Least-squares slope of log |y| against log x.
pub fn loglog_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let xs: Vec<f64> = pts.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.1.abs().ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Composite Simpson rule, `m` even.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, m: usize) -> f64 {
    let h = (b - a) / m as f64;
    let mut s = f(a) + f(b);
    for i in 1..m {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}
