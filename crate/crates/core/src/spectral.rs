//! Harish-Chandra spectral data of the spinor spherical transform.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{ln_gamma_real, log_gamma, HcSeries, JacobiParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Dimension-indexed constants of `H^n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub n: u32,
    pub rho: f64,
    pub r0: f64,
    pub parity: Parity,
}

pub const N_MIN: u32 = 2;
pub const N_MAX: u32 = 9;

impl Geometry {
    pub fn new(n: u32) -> Result<Self> {
        if !(N_MIN..=N_MAX).contains(&n) {
            return Err(Error::Parameter(format!("dimension n = {n} outside supported range {N_MIN}..={N_MAX}")));
        }
        let nf = n as f64;
        Ok(Self {
            n,
            rho: (nf - 1.0) / 2.0,
            r0: nf * (nf - 1.0) / 4.0,
            parity: if n % 2 == 0 { Parity::Even } else { Parity::Odd },
        })
    }

    pub fn nf(&self) -> f64 {
        self.n as f64
    }

    /// Smoothing order on the critical line, `(n+1)/2`.
    pub fn critical_theta(&self) -> f64 {
        (self.nf() + 1.0) / 2.0
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `c(r) = 2^{n-ir} Gamma(n/2) Gamma(ir) / (Gamma((n+ir)/2) Gamma(ir/2))`.
pub fn c_function_raw(g: &Geometry, r: f64) -> Result<Complex64> {
    if r == 0.0 {
        return Err(Error::Pole(0));
    }
    let n = g.nf();
    let ir = c(0.0, r);
    let v = (n - ir) * std::f64::consts::LN_2 + ln_gamma_real(n / 2.0)? + log_gamma(ir)?
        - log_gamma((ir + n) / 2.0)?
        - log_gamma(ir / 2.0)?;
    Ok(v.exp())
}

/// `c(2r) = 2 Gamma(n-1)/Gamma((n-1)/2) * Gamma(ir+1/2)/Gamma(ir+n/2)`.
pub fn c_function_simplified(g: &Geometry, r: f64) -> Complex64 {
    c_simplified_complex(g, c(r, 0.0)).expect("no poles for real r")
}

/// [`c_function_simplified`] continued to complex `r`.
pub fn c_simplified_complex(g: &Geometry, r: Complex64) -> Result<Complex64> {
    let n = g.nf();
    let ir = Complex64::i() * r;
    let pre = std::f64::consts::LN_2 + ln_gamma_real(n - 1.0)? - ln_gamma_real((n - 1.0) / 2.0)?;
    Ok((log_gamma(ir + 0.5)? - log_gamma(ir + n / 2.0)? + pre).exp())
}

/// Limit of `|c(2r)|^{-1} / r^{(n-1)/2}` as `r -> infinity`.
pub fn c_asymptotic_constant(g: &Geometry) -> f64 {
    let n = g.nf();
    (ln_gamma_real((n - 1.0) / 2.0).unwrap() - ln_gamma_real(n - 1.0).unwrap()).exp() / 2.0
}

/// Plancherel density `mu(r)`, even in `r`.
pub fn plancherel_density(g: &Geometry, r: f64) -> f64 {
    let r = r.abs();
    let n = g.nf();
    match g.parity {
        Parity::Odd => {
            let pre = (2.0 * ln_gamma_real((n - 1.0) / 2.0).unwrap() - 2.0 * ln_gamma_real(n - 1.0).unwrap()).exp()
                / (4.0 * PI);
            let mut prod = 1.0;
            for j in 1..=(g.n - 1) / 2 {
                let h = j as f64 - 0.5;
                prod *= r * r + h * h;
            }
            pre * prod
        }
        Parity::Even => {
            let pre = (-(2.0 * n - 3.0) * std::f64::consts::LN_2 - 2.0 * ln_gamma_real(n / 2.0).unwrap()).exp();
            let rc = if r == 0.0 { 1.0 / PI } else { r / (PI * r).tanh() };
            let mut prod = 1.0;
            for j in 1..g.n / 2 {
                let jf = j as f64;
                prod *= r * r + jf * jf;
            }
            pre * rc * prod
        }
    }
}

/// `mu` continued to complex `r` with `Re r > 0`.
pub fn plancherel_density_complex(g: &Geometry, r: Complex64) -> Complex64 {
    let n = g.nf();
    let r2 = r * r;
    match g.parity {
        Parity::Odd => {
            let pre = (2.0 * ln_gamma_real((n - 1.0) / 2.0).unwrap() - 2.0 * ln_gamma_real(n - 1.0).unwrap()).exp()
                / (4.0 * PI);
            let mut prod = c(pre, 0.0);
            for j in 1..=(g.n - 1) / 2 {
                let h = j as f64 - 0.5;
                prod *= r2 + h * h;
            }
            prod
        }
        Parity::Even => {
            let pre = (-(2.0 * n - 3.0) * std::f64::consts::LN_2 - 2.0 * ln_gamma_real(n / 2.0).unwrap()).exp();
            // coth(pi r) = (1 + e^{-2 pi r}) / (1 - e^{-2 pi r}) stays bounded for Re r > 0
            let e = (-2.0 * PI * r).exp();
            let mut prod = pre * r * (1.0 + e) / (1.0 - e);
            for j in 1..g.n / 2 {
                let jf = j as f64;
                prod *= r2 + jf * jf;
            }
            prod
        }
    }
}

/// Expansion coefficients `Gamma_{2m}(r)`, `m = 0..=M`, with their split into
/// an `r`-independent part and a remainder.
#[derive(Debug, Clone)]
pub struct HCCoefficients {
    pub geometry: Geometry,
    pub r: f64,
    pub max_index: usize,
    /// Operative coefficients, obtained by substituting the expansion into the Jacobi equation.
    pub values: Vec<Complex64>,
    /// `(C_{n,m}, tilde Gamma_{2m}(r))` with `C_{n,m} = lim_{r -> inf} Gamma_{2m}(r)`.
    pub split: Vec<(f64, Complex64)>,
    /// The recurrence in its literal form, without the `Gamma_{2m'}` factor inside the sum.
    pub literal: Vec<Complex64>,
    /// The split `(C_{n,m}, tilde Gamma_{2m})` of the literal recurrence.
    pub literal_split: Vec<(f64, Complex64)>,
}

/// `r`-independent limits of the coefficients: `C_k = (1/k) sum_{j<k} b_{kj} C_j`.
pub fn hc_limit_coefficients(g: &Geometry, m: usize) -> Vec<f64> {
    let n = g.nf();
    let mut out = vec![1.0];
    let mut sums = [0.0f64; 2];
    for k in 1..=m {
        sums[(k - 1) % 2] += out[k - 1];
        let v = (n * sums[k % 2] - sums[(k + 1) % 2]) / k as f64;
        out.push(v);
    }
    out
}

pub fn hc_coefficients(g: &Geometry, r: f64, m: usize) -> HCCoefficients {
    let values = HcSeries::fixed(JacobiParams::spinor(g.n), c(r, 0.0), m);
    let limits = hc_limit_coefficients(g, m);
    let split = limits.iter().zip(&values).map(|(&cl, &v)| (cl, v - cl)).collect();
    let n = g.nf();
    let ir = c(0.0, r);
    let mut literal = vec![c(1.0, 0.0)];
    let mut literal_split = vec![(1.0, c(0.0, 0.0))];
    for mm in 1..=m {
        let mf = mm as f64;
        let mut total = c(0.0, 0.0);
        let mut cpart = 0.0;
        let mut tilde = c(0.0, 0.0);
        for j in 0..mm {
            let delta = if (mm - j) % 2 == 0 { 1.0 } else { 0.0 };
            let b = delta * (n + 1.0) - 1.0;
            let jf = j as f64;
            total += b * (2.0 * jf + n - ir) / (mf * (mf - ir));
            cpart += b / mf;
            tilde += b / mf * (2.0 * jf + n - mf) / (mf - ir);
        }
        literal.push(total);
        literal_split.push((cpart, tilde));
    }
    HCCoefficients { geometry: *g, r, max_index: m, values, split, literal, literal_split }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HcSeriesValue {
    pub value: Complex64,
    /// Magnitude of the last included term.
    pub last_term: f64,
    /// Set when the last term exceeds `1e-12` of the partial sum.
    pub truncated: bool,
}

/// Partial sum `Phi_r(s) = e^{(ir-n)s} sum_{m=0}^{M} Gamma_{2m}(r) e^{-2ms}`.
pub fn hc_series(g: &Geometry, r: f64, s: f64, m: usize) -> Result<HcSeriesValue> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!("expansion needs s > 0, got {s}")));
    }
    let coeffs = HcSeries::fixed(JacobiParams::spinor(g.n), c(r, 0.0), m);
    Ok(series_from(g, &coeffs, r, s))
}

fn series_from(g: &Geometry, coeffs: &[Complex64], r: f64, s: f64) -> HcSeriesValue {
    let q = (-2.0 * s).exp();
    let mut acc = c(0.0, 0.0);
    for cf in coeffs.iter().rev() {
        acc = acc * q + cf;
    }
    let lead = (c(-g.nf(), r) * s).exp();
    let m = coeffs.len() - 1;
    let last = (coeffs[m] * (-2.0 * s * m as f64).exp() * lead).norm();
    let value = lead * acc;
    HcSeriesValue { value, last_term: last, truncated: last > 1e-12 * value.norm() }
}

/// `c(r) Phi_r(s) + c(-r) Phi_{-r}(s)` with `M` terms.
pub fn hc_reconstruct(g: &Geometry, r: f64, s: f64, m: usize) -> Result<Complex64> {
    let plus = hc_series(g, r, s, m)?.value;
    let minus = hc_series(g, -r, s, m)?.value;
    Ok(c_function_raw(g, r)? * plus + c_function_raw(g, -r)? * minus)
}

/// The same reconstruction using the literal coefficients.
pub fn hc_reconstruct_literal(g: &Geometry, r: f64, s: f64, m: usize) -> Result<Complex64> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!("expansion needs s > 0, got {s}")));
    }
    let plus = series_from(g, &hc_coefficients(g, r, m).literal, r, s).value;
    let minus = series_from(g, &hc_coefficients(g, -r, m).literal, -r, s).value;
    Ok(c_function_raw(g, r)? * plus + c_function_raw(g, -r)? * minus)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MuCConsistency {
    /// Mean of `mu(r) |c(2r)|^2` over the grid.
    pub constant: f64,
    /// `(max - min) / mean` over the grid.
    pub spread: f64,
    pub ratios: Vec<f64>,
}

/// Evaluates `mu(r) |c(2r)|^2` on a grid and reports its spread.
pub fn mu_c_consistency(g: &Geometry, r_grid: &[f64]) -> Result<MuCConsistency> {
    if r_grid.is_empty() || r_grid.iter().any(|r| !(*r > 0.0)) {
        return Err(Error::Parameter("r grid must be nonempty with r > 0".into()));
    }
    let ratios: Vec<f64> =
        r_grid.iter().map(|&r| plancherel_density(g, r) * c_function_simplified(g, r).norm_sqr()).collect();
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
    Ok(MuCConsistency { constant: mean, spread: (max - min) / mean, ratios })
}

/// Fitted growth exponents `(nu_1, nu_2)` with `|C_{n,m}| ~ m^{nu_1}` and
/// `sup_r r |tilde Gamma_{2m}(r)| ~ m^{nu_2}`, from a log-log fit over `m in [m_max/10, m_max]`.
pub fn hc_growth_exponents(g: &Geometry, m_max: usize, r_grid: &[f64]) -> (f64, f64) {
    let m_lo = (m_max / 10).max(2);
    let mut c_pts = Vec::new();
    let mut t_pts = vec![0.0f64; m_max + 1];
    for &r in r_grid {
        let h = hc_coefficients(g, r, m_max);
        for m in m_lo..=m_max {
            t_pts[m] = t_pts[m].max(r * h.split[m].1.norm());
        }
        if c_pts.is_empty() {
            c_pts = (m_lo..=m_max).map(|m| (m as f64, h.split[m].0.abs())).collect();
        }
    }
    let t: Vec<(f64, f64)> = (m_lo..=m_max).map(|m| (m as f64, t_pts[m])).collect();
    (envelope_slope(&c_pts), envelope_slope(&t))
}

// Slope of the upper envelope in log-log coordinates, from the maxima over
// the lower and upper halves of the range.
fn envelope_slope(pts: &[(f64, f64)]) -> f64 {
    let h = pts.len() / 2;
    let top =
        |s: &[(f64, f64)]| s.iter().filter(|p| p.1 > 0.0).fold((1.0, 0.0), |acc, p| if p.1 > acc.1 { *p } else { acc });
    let a = top(&pts[..h]);
    let b = top(&pts[h..]);
    (b.1.ln() - a.1.ln()) / (b.0.ln() - a.0.ln())
}
