use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default cap on the number of series terms.
pub const DEFAULT_TERM_CAP: usize = 100_000;

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: Complex64) {
        let (re, cr) = two_sum(self.sum.re, x.re);
        let (im, ci) = two_sum(self.sum.im, x.im);
        self.sum = Complex64::new(re, im);
        self.comp += Complex64::new(cr, ci);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn check_c(c: Complex64) -> Result<()> {
    if c.im == 0.0 && c.re <= 0.0 && c.re == c.re.round() {
        return Err(Error::Parameter(format!("c = {} is a nonpositive integer", c.re)));
    }
    Ok(())
}

/// Gauss hypergeometric `2F1(a, b; c; z)` for real `z <= 0`.
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    hyp2f1_capped(a, b, c, z, DEFAULT_TERM_CAP)
}

/// As [`hyp2f1`] with an explicit cap on the number of series terms.
pub fn hyp2f1_capped(a: Complex64, b: Complex64, c: Complex64, z: f64, cap: usize) -> Result<Complex64> {
    check_c(c)?;
    if !(z <= 0.0) {
        return Err(Error::Domain(format!("2F1 argument z = {z} must be <= 0")));
    }
    if z == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
    let w = z / (z - 1.0);
    let s = series(a, c - b, c, w, cap)?;
    let pre = (-a * (1.0 - z).ln()).exp();
    Ok(pre * s)
}

/// Direct power series of `2F1(a, b; c; w)` for `0 <= w < 1`.
pub(crate) fn series(a: Complex64, b: Complex64, c: Complex64, w: f64, cap: usize) -> Result<Complex64> {
    let mut acc = CompensatedSum::new();
    let mut term = Complex64::new(1.0, 0.0);
    acc.add(term);
    let mut small = 0;
    for k in 0..cap {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * w;
        if term == Complex64::new(0.0, 0.0) {
            return Ok(acc.value());
        }
        acc.add(term);
        if term.norm() < 1e-16 * acc.value().norm() {
            small += 1;
            if small == 3 {
                return Ok(acc.value());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::SeriesCap(cap))
}
