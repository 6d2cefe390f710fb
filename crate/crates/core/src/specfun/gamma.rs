use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;

// Partial-fraction coefficients for g = 7, fitted at z = 0..14.
const LANCZOS_C: [f64; 15] = [
    1.000000000000000007406,
    676.5203681218835372087,
    -1259.139216722281773893,
    771.3234287754377065164,
    -176.6150291459897810877,
    12.50734322502874532697,
    -0.1385710323332822431296,
    0.00001009112629473137286228,
    -3.434584225253104608054e-7,
    8.359337835712596538246e-7,
    -8.597755644539608755437e-7,
    6.046497338494928107833e-7,
    -2.91132872789061371386e-7,
    8.589129313568226855861e-8,
    -1.164606563986785152934e-8,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Logarithm of the Gamma function.
///
/// On `Re z >= 1/2` this is the branch continuous from the real axis.
/// Left of that line the reflection formula is used, so only `exp` of the
/// result is meaningful there.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    let k = z.re.round();
    if k <= 0.0 && (z - Complex64::new(k, 0.0)).norm() < 1e-14 {
        return Err(Error::Pole(k as i64));
    }
    if z.re < 0.5 {
        let one = Complex64::new(1.0, 0.0);
        Ok(Complex64::new(LN_PI, 0.0) - ln_sin_pi(z) - lanczos(one - z))
    } else {
        Ok(lanczos(z))
    }
}

fn lanczos(z: Complex64) -> Complex64 {
    let w = z - 1.0;
    let mut a = Complex64::new(LANCZOS_C[0], 0.0);
    for (k, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        a += c / (w + k as f64);
    }
    let zg = w + LANCZOS_G + 0.5;
    (w + 0.5) * zg.ln() - zg + HALF_LN_2PI + a.ln()
}

/// `ln sin(pi z)` without overflow for large `|Im z|`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    // sin(pi z) has period 2 in Re z
    let shift = 2.0 * (z.re / 2.0).round();
    let z = Complex64::new(z.re - shift, z.im);
    let i = Complex64::i();
    if z.im > 5.0 {
        let e = (2.0 * i * PI * z).exp();
        -i * PI * z + (1.0 - e).ln() - std::f64::consts::LN_2 + i * (PI / 2.0)
    } else if z.im < -5.0 {
        let e = (-2.0 * i * PI * z).exp();
        i * PI * z + (1.0 - e).ln() - std::f64::consts::LN_2 - i * (PI / 2.0)
    } else {
        (PI * z).sin().ln()
    }
}

/// `Gamma(z)` for complex `z`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// `ln |Gamma(x)|` for real `x`.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    Ok(log_gamma(Complex64::new(x, 0.0))?.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_integers_and_half() {
        assert!(log_gamma(Complex64::new(1.0, 0.0)).unwrap().norm() < 1e-15);
        let h = log_gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!((h.re - 0.572_364_942_924_700_1).abs() < 1e-14);
        let six = log_gamma(Complex64::new(6.0, 0.0)).unwrap();
        assert!((six.re - 120f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn poles_rejected() {
        assert_eq!(log_gamma(Complex64::new(0.0, 0.0)), Err(Error::Pole(0)));
        assert_eq!(log_gamma(Complex64::new(-3.0, 1e-15)), Err(Error::Pole(-3)));
        assert!(log_gamma(Complex64::new(-3.0, 1e-9)).is_ok());
    }

    #[test]
    fn reflection_values() {
        // Gamma(-0.5) = -2 sqrt(pi)
        let v = gamma(Complex64::new(-0.5, 0.0)).unwrap();
        assert!((v.re + 2.0 * PI.sqrt()).abs() < 1e-13 && v.im.abs() < 1e-13);
        // |Gamma(iy)|^2 = pi / (y sinh(pi y)) far from the real axis
        let y = 12.0;
        let g = gamma(Complex64::new(-0.0, y)).unwrap();
        let want = PI / (y * (PI * y).sinh());
        assert!((g.norm_sqr() / want - 1.0).abs() < 1e-12);
    }
}
