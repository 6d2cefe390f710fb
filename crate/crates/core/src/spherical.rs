//! Scalar components of the spinor spherical functions and the ground
//! spherical function.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{jacobi_phi_grid, jacobi_phi_real, JacobiParams};
use crate::spectral::{Geometry, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SphericalKind {
    EvenPm,
    OddPlusPlus,
    OddPlusMinus,
    OddMinusPlus,
    OddMinusMinus,
    Ground,
}

impl SphericalKind {
    pub const ODD: [SphericalKind; 4] = [
        SphericalKind::OddPlusPlus,
        SphericalKind::OddPlusMinus,
        SphericalKind::OddMinusPlus,
        SphericalKind::OddMinusMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SphericalKind::EvenPm => "even",
            SphericalKind::OddPlusPlus => "pp",
            SphericalKind::OddPlusMinus => "pm",
            SphericalKind::OddMinusPlus => "mp",
            SphericalKind::OddMinusMinus => "mm",
            SphericalKind::Ground => "ground",
        }
    }

    /// Sign of the odd-dimension correction term: component = even term + sign * tilde.
    pub fn tilde_sign(self) -> f64 {
        match self {
            SphericalKind::OddPlusPlus | SphericalKind::OddMinusMinus => -1.0,
            SphericalKind::OddPlusMinus | SphericalKind::OddMinusPlus => 1.0,
            _ => 0.0,
        }
    }
}

/// A scalar spherical component bound to a geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalComponent {
    pub geometry: Geometry,
    pub kind: SphericalKind,
}

impl SphericalComponent {
    pub fn new(geometry: Geometry, kind: SphericalKind) -> Result<Self> {
        let ok = match kind {
            SphericalKind::EvenPm | SphericalKind::Ground => true,
            _ => geometry.parity == Parity::Odd,
        };
        if !ok {
            return Err(Error::Parity(format!("component {} needs odd n, got n = {}", kind.name(), geometry.n)));
        }
        Ok(Self { geometry, kind })
    }

    pub fn eval(&self, r: f64, s: f64) -> Result<Complex64> {
        let g = &self.geometry;
        match self.kind {
            SphericalKind::EvenPm => scalar_even(g, r, s),
            SphericalKind::Ground => Ok(Complex64::new(ground_spherical(g, s)?, 0.0)),
            k => Ok(scalar_even(g, r, s)? + k.tilde_sign() * phi_tilde(g, r, s)?),
        }
    }
}

fn check_s(s: f64) -> Result<()> {
    if !(s >= 0.0) {
        return Err(Error::Domain(format!("geodesic radius must be >= 0, got {s}")));
    }
    Ok(())
}

/// `cosh(s/2) phi_{2r}^{(n/2-1, n/2)}(s/2)`; also the shared first term in odd `n`.
pub fn scalar_even(g: &Geometry, r: f64, s: f64) -> Result<Complex64> {
    check_s(s)?;
    let v = (s / 2.0).cosh() * jacobi_phi_real(JacobiParams::spinor(g.n), 2.0 * r, s / 2.0)?;
    Ok(Complex64::new(v, 0.0))
}

/// `(2ri/n) sinh(s/2) phi_{2r}^{(n/2, n/2-1)}(s/2)`.
pub fn phi_tilde(g: &Geometry, r: f64, s: f64) -> Result<Complex64> {
    check_s(s)?;
    let v = 2.0 * r / g.nf() * (s / 2.0).sinh() * jacobi_phi_real(JacobiParams::spinor_tilde(g.n), 2.0 * r, s / 2.0)?;
    Ok(Complex64::new(0.0, v))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddComponents {
    pub pp: Complex64,
    pub pm: Complex64,
    pub mp: Complex64,
    pub mm: Complex64,
}

/// The four odd-dimension components `phi_{+/-}^{+/-}`; the first letter is
/// the spectral sign, the second the component.
pub fn scalar_odd(g: &Geometry, r: f64, s: f64) -> Result<OddComponents> {
    if g.parity != Parity::Odd {
        return Err(Error::Parity(format!("odd components need odd n, got n = {}", g.n)));
    }
    let e = scalar_even(g, r, s)?;
    let t = phi_tilde(g, r, s)?;
    Ok(OddComponents { pp: e - t, pm: e + t, mp: e + t, mm: e - t })
}

/// Even term and tilde magnitude on an ascending `s` grid, for fixed `r`:
/// returns `(cosh(s/2) phi(s/2), (2r/n) sinh(s/2) phi~(s/2))`.
pub fn components_on_grid(g: &Geometry, r: f64, s_grid: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let half: Vec<f64> = s_grid.iter().map(|s| s / 2.0).collect();
    let e = jacobi_phi_grid(JacobiParams::spinor(g.n), 2.0 * r, &half)?;
    let even: Vec<f64> = half.iter().zip(&e).map(|(x, v)| x.cosh() * v).collect();
    let tilde = if g.parity == Parity::Odd {
        let t = jacobi_phi_grid(JacobiParams::spinor_tilde(g.n), 2.0 * r, &half)?;
        half.iter().zip(&t).map(|(x, v)| 2.0 * r / g.nf() * x.sinh() * v).collect()
    } else {
        Vec::new()
    };
    Ok((even, tilde))
}

/// Relative difference between `phi~` evaluated directly and through its
/// derivative form `(n/(2ir)) sinh(s/2) phi(s/2) + (1/(ir)) cosh(s/2) d/ds phi(s/2)`.
pub fn phi_tilde_identity_residual(g: &Geometry, r: f64, s: f64) -> Result<f64> {
    if g.parity != Parity::Odd {
        return Err(Error::Parity(format!("identity is stated for odd n, got n = {}", g.n)));
    }
    if r == 0.0 || !(s > 0.0) {
        return Err(Error::Domain("identity needs r != 0 and s > 0".into()));
    }
    let p = JacobiParams::spinor(g.n);
    let f = |x: f64| jacobi_phi_real(p, 2.0 * r, x / 2.0);
    let h = 1e-5 * s.max(1.0);
    let d = (f(s + h)? - f(s - h)?) / (2.0 * h);
    let ir = Complex64::new(0.0, r);
    let rhs = g.nf() / (2.0 * ir) * (s / 2.0).sinh() * f(s)? + (s / 2.0).cosh() * d / ir;
    let lhs = phi_tilde(g, r, s)?;
    Ok((lhs - rhs).norm() / lhs.norm())
}

/// Ground spherical function `phi_0(s)`, the `lambda = 0` Jacobi function of
/// the pair `((n-2)/2, -1/2)`.
pub fn ground_spherical(g: &Geometry, s: f64) -> Result<f64> {
    check_s(s)?;
    jacobi_phi_real(JacobiParams::scalar(g.n), 0.0, s)
}

/// Ground spherical function on an ascending grid.
pub fn ground_spherical_grid(g: &Geometry, s_grid: &[f64]) -> Result<Vec<f64>> {
    jacobi_phi_grid(JacobiParams::scalar(g.n), 0.0, s_grid)
}

/// Finite-difference residual of the Jacobi equation
/// `v'' + ((n-1) coth s + (n+1) tanh s) v' + (r^2 + n^2) v` for
/// `v = phi_r^{(n/2-1, n/2)}`, scaled by `max(1, |v|)`.
pub fn jacobi_ode_residual(g: &Geometry, r: f64, s: f64) -> Result<f64> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!("residual needs s > 0, got {s}")));
    }
    let p = JacobiParams::spinor(g.n);
    let h = 1e-4;
    let v = |x: f64| jacobi_phi_real(p, r, x);
    let (vm, v0, vp) = (v(s - h)?, v(s)?, v(s + h)?);
    let d1 = (vp - vm) / (2.0 * h);
    let d2 = (vp - 2.0 * v0 + vm) / (h * h);
    let n = g.nf();
    let res = d2 + ((n - 1.0) / s.tanh() + (n + 1.0) * s.tanh()) * d1 + (r * r + n * n) * v0;
    Ok(res.abs() / v0.abs().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_values() {
        let g = Geometry::new(3).unwrap();
        let o = scalar_odd(&g, 2.5, 0.0).unwrap();
        for v in [o.pp, o.pm, o.mp, o.mm] {
            assert_eq!(v, Complex64::new(1.0, 0.0));
        }
        assert_eq!(ground_spherical(&g, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn ground_three_closed_form() {
        let g = Geometry::new(3).unwrap();
        for &s in &[0.5, 3.0, 20.0, 60.0] {
            let want = s / f64::sinh(s);
            assert!((ground_spherical(&g, s).unwrap() / want - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn parity_checked() {
        let g = Geometry::new(4).unwrap();
        assert!(scalar_odd(&g, 1.0, 1.0).is_err());
        assert!(SphericalComponent::new(g, SphericalKind::OddPlusPlus).is_err());
    }
}
