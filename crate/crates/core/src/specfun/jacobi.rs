use num_complex::Complex64;

use super::gamma::log_gamma;
use super::hyp::hyp2f1;
use super::ode::{Integrator, State};
use crate::error::{Error, Result};

/// Parameter pair `(alpha, beta)` of a Jacobi function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
    pub rho_j: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) || !beta.is_finite() {
            return Err(Error::Parameter(format!(
                "Jacobi parameters need alpha > -1 (got alpha = {alpha}, beta = {beta})"
            )));
        }
        Ok(Self { alpha, beta, rho_j: alpha + beta + 1.0 })
    }

    /// `(n/2 - 1, n/2)`, the pair behind the even spinor component.
    pub fn spinor(n: u32) -> Self {
        let h = n as f64 / 2.0;
        Self::new(h - 1.0, h).expect("valid for n >= 1")
    }

    /// `(n/2, n/2 - 1)`, the pair behind the odd-dimension correction term.
    pub fn spinor_tilde(n: u32) -> Self {
        let h = n as f64 / 2.0;
        Self::new(h, h - 1.0).expect("valid for n >= 1")
    }

    /// `((n-2)/2, -1/2)`, the scalar pair for the weight `(2 sinh s)^(n-1)`.
    pub fn scalar(n: u32) -> Self {
        Self::new((n as f64 - 2.0) / 2.0, -0.5).expect("valid for n >= 1")
    }

    fn c_param(&self) -> f64 {
        self.alpha + 1.0
    }
}

/// Jacobi function `phi_lambda^(alpha,beta)(t)`.
pub fn jacobi_phi(p: JacobiParams, lambda: f64, t: f64) -> Result<Complex64> {
    Ok(Complex64::new(jacobi_phi_real(p, lambda, t)?, 0.0))
}

/// Real value of [`jacobi_phi`] for real `lambda`.
pub fn jacobi_phi_real(p: JacobiParams, lambda: f64, t: f64) -> Result<f64> {
    Ok(jacobi_phi_grid(p, lambda, &[t])?[0])
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Route {
    Origin,
    Series,
    Harish,
    Ode,
}

const SERIES_W_MAX: f64 = 0.9;
const SERIES_OSC_MAX: f64 = 8.0;
const HC_T_MIN: f64 = 0.2;
const HC_LT_MIN: f64 = 2.0;

fn route(lambda: f64, t: f64) -> Route {
    if t == 0.0 {
        return Route::Origin;
    }
    let th = t.tanh();
    if th * th <= SERIES_W_MAX && lambda * th <= SERIES_OSC_MAX {
        Route::Series
    } else if t >= HC_T_MIN && lambda * t >= HC_LT_MIN {
        Route::Harish
    } else {
        Route::Ode
    }
}

/// Jacobi function on an ascending grid of `t >= 0`.
///
/// Points needing numerical integration share a single sweep.
pub fn jacobi_phi_grid(p: JacobiParams, lambda: f64, ts: &[f64]) -> Result<Vec<f64>> {
    let lambda = lambda.abs();
    if let Some(&t) = ts.iter().find(|t| !(**t >= 0.0)) {
        return Err(Error::Domain(format!("Jacobi function needs t >= 0, got {t}")));
    }
    if ts.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Parameter("grid must be ascending".into()));
    }
    let mut out = vec![0.0; ts.len()];
    let mut ode_idx = Vec::new();
    let mut hc: Option<HcSeries> = None;
    for (i, &t) in ts.iter().enumerate() {
        out[i] = match route(lambda, t) {
            Route::Origin => 1.0,
            Route::Series => series_value(p, lambda, t)?,
            Route::Harish => {
                if hc.is_none() {
                    hc = Some(HcSeries::new(p, Complex64::new(lambda, 0.0), t)?);
                }
                let h = hc.as_mut().unwrap();
                h.ensure(t)?;
                let c = c_jacobi(p, Complex64::new(lambda, 0.0))?;
                2.0 * (c * h.phi_plus(t)).re
            }
            Route::Ode => {
                ode_idx.push(i);
                0.0
            }
        };
    }
    if !ode_idx.is_empty() {
        let targets: Vec<f64> = ode_idx.iter().map(|&i| ts[i]).collect();
        let vals = ode_values(p, lambda, &targets)?;
        for (&i, v) in ode_idx.iter().zip(vals) {
            out[i] = v;
        }
    }
    Ok(out)
}

fn series_params(p: JacobiParams, lambda: f64) -> (Complex64, Complex64, Complex64) {
    let a = Complex64::new(p.rho_j / 2.0, lambda / 2.0);
    let b = Complex64::new(p.rho_j / 2.0, -lambda / 2.0);
    (a, b, Complex64::new(p.c_param(), 0.0))
}

fn series_value(p: JacobiParams, lambda: f64, t: f64) -> Result<f64> {
    let (a, b, c) = series_params(p, lambda);
    let s = t.sinh();
    Ok(hyp2f1(a, b, c, -s * s)?.re)
}

fn series_derivative(p: JacobiParams, lambda: f64, t: f64) -> Result<f64> {
    let (a, b, c) = series_params(p, lambda);
    let s = t.sinh();
    let f = hyp2f1(a + 1.0, b + 1.0, c + 1.0, -s * s)?;
    Ok((a * b / c * f).re * (-2.0 * s * t.cosh()))
}

fn ode_values(p: JacobiParams, lambda: f64, targets: &[f64]) -> Result<Vec<f64>> {
    let x_series = if lambda <= SERIES_OSC_MAX { 1.0 } else { (SERIES_OSC_MAX / lambda).atanh().min(1.0) };
    let x0 = targets[0].min(x_series);
    let rho = p.rho_j;
    let v0 = series_value(p, lambda, x0)?;
    let dv0 = series_derivative(p, lambda, x0)?;
    let e = (rho * x0).exp();
    let y0: State = [e * v0, e * (dv0 + rho * v0)];
    let a1 = 2.0 * p.alpha + 1.0;
    let b1 = 2.0 * p.beta + 1.0;
    let l2 = lambda * lambda;
    // u = e^{rho t} v solves u'' = -(A - 2 rho)(u' - rho u) - lambda^2 u
    let rhs = move |x: f64, y: &State| -> State {
        let em = (-2.0 * x).exp();
        let coth_m1 = 2.0 * em / (1.0 - em);
        let tanh_m1 = -2.0 * em / (1.0 + em);
        let a = a1 * coth_m1 + b1 * tanh_m1;
        [y[1], -a * (y[1] - rho * y[0]) - l2 * y[0]]
    };
    let ig = Integrator::new(rhs);
    let h0 = 0.05f64.min(0.2 / lambda.max(1.0));
    let ys = ig.sweep(x0, y0, targets, h0).ok_or(Error::SeriesCap(ig.max_steps))?;
    Ok(targets.iter().zip(ys).map(|(&x, y)| (-rho * x).exp() * y[0]).collect())
}

/// Harish-Chandra c-function of the Jacobi pair at complex `lambda`.
pub fn c_jacobi(p: JacobiParams, lambda: Complex64) -> Result<Complex64> {
    let il = Complex64::i() * lambda;
    let ln2 = std::f64::consts::LN_2;
    let v = (p.rho_j - il) * ln2 + log_gamma(Complex64::new(p.c_param(), 0.0))? + log_gamma(il)?
        - log_gamma((il + p.rho_j) / 2.0)?
        - log_gamma((il + p.alpha - p.beta + 1.0) / 2.0)?;
    Ok(v.exp())
}

/// Coefficients of the expansion
/// `Phi_lambda(t) = e^{(i lambda - rho) t} sum_k Gamma_k e^{-2kt}`.
///
/// The coefficients follow from substituting the expansion into the Jacobi
/// equation; `ensure` grows the list until the tail is negligible at a given `t`.
#[derive(Debug, Clone)]
pub struct HcSeries {
    p: JacobiParams,
    lambda: Complex64,
    coeffs: Vec<Complex64>,
    // running sums of (rho + 2j - i lambda) Gamma_j over even / odd j
    par_sums: [Complex64; 2],
    used: usize,
    t_min: f64,
}

pub const HC_MAX_TERMS: usize = 20_000;

impl HcSeries {
    pub fn new(p: JacobiParams, lambda: Complex64, t_min: f64) -> Result<Self> {
        let mut s = Self {
            p,
            lambda,
            coeffs: vec![Complex64::new(1.0, 0.0)],
            par_sums: [Complex64::new(0.0, 0.0); 2],
            used: 1,
            t_min: f64::INFINITY,
        };
        s.ensure(t_min)?;
        Ok(s)
    }

    /// Coefficients entering [`HcSeries::sum`].
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs[..self.used]
    }

    /// Coefficients `Gamma_0..=Gamma_m` for a fixed count.
    pub fn fixed(p: JacobiParams, lambda: Complex64, m: usize) -> Vec<Complex64> {
        let mut s = Self {
            p,
            lambda,
            coeffs: vec![Complex64::new(1.0, 0.0)],
            par_sums: [Complex64::new(0.0, 0.0); 2],
            used: 1,
            t_min: f64::INFINITY,
        };
        while s.coeffs.len() <= m {
            s.push();
        }
        s.coeffs
    }

    fn push(&mut self) {
        let k = self.coeffs.len();
        let il = Complex64::i() * self.lambda;
        let j = k - 1;
        let prev = self.coeffs[j];
        self.par_sums[j % 2] += (self.p.rho_j + 2.0 * j as f64 - il) * prev;
        let same = self.p.rho_j;
        let opp = self.p.alpha - self.p.beta;
        let num = same * self.par_sums[k % 2] + opp * self.par_sums[(k + 1) % 2];
        let kf = k as f64;
        self.coeffs.push(num / (kf * (kf - il)));
    }

    /// Extend the coefficient list so the series is converged at `t`.
    pub fn ensure(&mut self, t: f64) -> Result<()> {
        if t >= self.t_min {
            return Ok(());
        }
        if !(t > 0.0) {
            return Err(Error::Domain("expansion needs t > 0".into()));
        }
        let mut sum = Complex64::new(0.0, 0.0);
        let mut small = 0;
        let mut k = 0;
        // walk forward until three consecutive terms are negligible
        loop {
            if k >= self.coeffs.len() {
                if k > HC_MAX_TERMS {
                    return Err(Error::SeriesCap(HC_MAX_TERMS));
                }
                self.push();
            }
            let term = self.coeffs[k] * (-2.0 * t * k as f64).exp();
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                small += 1;
                if small >= 3 && k >= 4 {
                    break;
                }
            } else {
                small = 0;
            }
            k += 1;
        }
        self.used = self.used.max(k + 1);
        self.t_min = t;
        Ok(())
    }

    /// `sum_k Gamma_k e^{-2kt}` (Horner in `e^{-2t}`).
    pub fn sum(&self, t: f64) -> Complex64 {
        let q = (-2.0 * t).exp();
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs[..self.used].iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// `Phi_lambda(t)` including the leading exponential.
    pub fn phi_plus(&self, t: f64) -> Complex64 {
        let il = Complex64::i() * self.lambda;
        ((il - self.p.rho_j) * t).exp() * self.sum(t)
    }
}
