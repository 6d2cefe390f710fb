//! Radial spherical transform of scalar components on fixed grids, spectral
//! projections and the half-wave flow `e^{it|D|}` applied to coefficients.

use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::propagator::SmoothingOrder;
use crate::spectral::{mu_c_consistency, plancherel_density, Geometry, Parity};
use crate::spherical::components_on_grid;

pub const S_MAX_LIMIT: f64 = 100.0;
/// Minimum samples per period of `e^{i r_max s}` on the profile grid.
pub const POINTS_PER_PERIOD: f64 = 8.0;
/// Largest admissible `|h(R_max)| mu(R_max)` relative to its peak.
pub const TAIL_TOL: f64 = 1e-10;

fn check_grid(grid: &[f64], what: &str, max: f64) -> Result<()> {
    if grid.len() < 2 {
        return Err(Error::Parameter(format!("{what} grid needs at least 2 points")));
    }
    if !(grid[0] >= 0.0) || grid.windows(2).any(|w| !(w[1] > w[0])) || !grid[grid.len() - 1].is_finite() {
        return Err(Error::Parameter(format!("{what} grid must be strictly increasing from >= 0")));
    }
    if grid[grid.len() - 1] > max {
        return Err(Error::Parameter(format!("{what} grid exceeds {max}")));
    }
    Ok(())
}

/// `n` points evenly spaced on `[a, b]`.
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let h = (b - a) / (n - 1) as f64;
    (0..n).map(|i| if i + 1 == n { b } else { a + h * i as f64 }).collect()
}

/// Composite weights on a grid: Gregory end corrections of fourth order when
/// the grid is uniform with at least 8 points, trapezoid otherwise.
pub fn grid_weights(grid: &[f64]) -> Vec<f64> {
    let m = grid.len();
    if m < 8 {
        return trapezoid_weights(grid);
    }
    let h = (grid[m - 1] - grid[0]) / (m - 1) as f64;
    if !grid.windows(2).all(|x| ((x[1] - x[0]) - h).abs() <= 1e-9 * h) {
        return trapezoid_weights(grid);
    }
    let mut w = vec![h; m];
    for (i, c) in [3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0].iter().enumerate() {
        w[i] = c * h;
        w[m - 1 - i] = c * h;
    }
    w
}

/// Trapezoid weights. On `r` grids starting at 0 the integrands are even in
/// `r`, where the plain rule has no end correction at the origin.
pub fn trapezoid_weights(grid: &[f64]) -> Vec<f64> {
    let m = grid.len();
    let mut w = vec![0.0; m];
    for i in 0..m.saturating_sub(1) {
        let d = 0.5 * (grid[i + 1] - grid[i]);
        w[i] += d;
        w[i + 1] += d;
    }
    w
}

/// Cartan density `(2 sinh s)^{n-1}`.
pub fn cartan_density(g: &Geometry, s: f64) -> f64 {
    (2.0 * s.sinh()).powi(g.n as i32 - 1)
}

/// One scalar component `f(s)` of a radial spinor field, sampled on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    pub geometry: Geometry,
    pub s_grid: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl RadialProfile {
    pub fn new(geometry: Geometry, s_grid: Vec<f64>, values: Vec<Complex64>) -> Result<Self> {
        check_grid(&s_grid, "s", S_MAX_LIMIT)?;
        if values.len() != s_grid.len() {
            return Err(Error::Parameter(format!("{} values for {} grid points", values.len(), s_grid.len())));
        }
        Ok(Self { geometry, s_grid, values })
    }

    pub fn from_fn<F: Fn(f64) -> Complex64>(geometry: Geometry, s_grid: Vec<f64>, f: F) -> Result<Self> {
        let values = s_grid.iter().map(|&s| f(s)).collect();
        Self::new(geometry, s_grid, values)
    }

    /// Columnar text with a `# hyperdirac-profile v1` header.
    pub fn to_text(&self) -> String {
        let mut out = header(&self.geometry);
        out.push_str("s,value_re,value_im\n");
        for (s, v) in self.s_grid.iter().zip(&self.values) {
            let _ = writeln!(out, "{s:e},{:e},{:e}", v.re, v.im);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let (g, rows) = parse_columns(text, 3)?;
        let s = rows.iter().map(|r| r[0]).collect();
        let v = rows.iter().map(|r| Complex64::new(r[1], r[2])).collect();
        Self::new(g, s, v)
    }
}

/// Spectral coefficients on `r >= 0`; `minus` is present exactly for odd `n`
/// and stores `H_-(r) = H_+(-r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCoefficients {
    pub geometry: Geometry,
    pub r_grid: Vec<f64>,
    pub plus: Vec<Complex64>,
    pub minus: Option<Vec<Complex64>>,
}

impl SpectralCoefficients {
    pub fn new(
        geometry: Geometry,
        r_grid: Vec<f64>,
        plus: Vec<Complex64>,
        minus: Option<Vec<Complex64>>,
    ) -> Result<Self> {
        check_grid(&r_grid, "r", f64::MAX)?;
        if plus.len() != r_grid.len() || minus.as_ref().is_some_and(|m| m.len() != r_grid.len()) {
            return Err(Error::Parameter("coefficient and grid lengths differ".into()));
        }
        if minus.is_some() != (geometry.parity == Parity::Odd) {
            return Err(Error::Parity(format!(
                "n = {} needs {} coefficient lists",
                geometry.n,
                if geometry.parity == Parity::Odd { 2 } else { 1 }
            )));
        }
        Ok(Self { geometry, r_grid, plus, minus })
    }

    /// `(int (|H_+|^2 + |H_-|^2) mu dr / N_fwd)^{1/2}` with the grid rule,
    /// equal to the Cartan-measure L2 norm of the field.
    pub fn weighted_norm(&self) -> Result<f64> {
        let w = trapezoid_weights(&self.r_grid);
        let mut acc = 0.0;
        for i in 0..self.r_grid.len() {
            let mut a = self.plus[i].norm_sqr();
            if let Some(m) = &self.minus {
                a += m[i].norm_sqr();
            }
            acc += a * w[i] * plancherel_density(&self.geometry, self.r_grid[i]);
        }
        Ok((acc / n_fwd(&self.geometry)?).sqrt())
    }

    fn map<F: Fn(f64, Complex64, bool) -> Complex64>(&self, f: F) -> Self {
        let plus = self.r_grid.iter().zip(&self.plus).map(|(&r, &h)| f(r, h, true)).collect();
        let minus = self.minus.as_ref().map(|m| self.r_grid.iter().zip(m).map(|(&r, &h)| f(r, h, false)).collect());
        Self { geometry: self.geometry, r_grid: self.r_grid.clone(), plus, minus }
    }

    pub fn to_text(&self) -> String {
        let mut out = header(&self.geometry);
        if let Some(m) = &self.minus {
            out.push_str("r,plus_re,plus_im,minus_re,minus_im\n");
            for i in 0..self.r_grid.len() {
                let (p, q) = (self.plus[i], m[i]);
                let _ = writeln!(out, "{:e},{:e},{:e},{:e},{:e}", self.r_grid[i], p.re, p.im, q.re, q.im);
            }
        } else {
            out.push_str("r,plus_re,plus_im\n");
            for (r, p) in self.r_grid.iter().zip(&self.plus) {
                let _ = writeln!(out, "{r:e},{:e},{:e}", p.re, p.im);
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let odd = text.lines().next().is_some_and(|l| l.contains("parity=odd"));
        let (g, rows) = parse_columns(text, if odd { 5 } else { 3 })?;
        let r = rows.iter().map(|x| x[0]).collect();
        let plus = rows.iter().map(|x| Complex64::new(x[1], x[2])).collect();
        let minus = odd.then(|| rows.iter().map(|x| Complex64::new(x[3], x[4])).collect());
        Self::new(g, r, plus, minus)
    }
}

fn header(g: &Geometry) -> String {
    format!("# hyperdirac-profile v1 n={} parity={}\n", g.n, g.parity.as_str())
}

fn parse_columns(text: &str, cols: usize) -> Result<(Geometry, Vec<Vec<f64>>)> {
    let mut lines = text.lines();
    let head = lines.next().unwrap_or_default();
    let n = head
        .strip_prefix("# hyperdirac-profile v1 ")
        .and_then(|rest| rest.split_whitespace().find_map(|kv| kv.strip_prefix("n=")))
        .and_then(|v| v.parse::<u32>().ok())
        .ok_or_else(|| Error::Parameter(format!("bad header line {head:?}")))?;
    let g = Geometry::new(n)?;
    if !head.contains(&format!("parity={}", g.parity.as_str())) {
        return Err(Error::Parity(format!("header parity does not match n = {n}")));
    }
    let mut rows = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with(|c: char| c.is_ascii_alphabetic()) {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|x| x.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parameter(format!("bad row {line:?}: {e}")))?;
        if row.len() != cols {
            return Err(Error::Parameter(format!("expected {cols} columns in {line:?}")));
        }
        rows.push(row);
    }
    Ok((g, rows))
}

/// Forward normalization fixed by the round trip: `2/(pi K)` for even `n`
/// and `1/(2 pi K)` for odd `n`, with `K` the constant value of `mu |c|^2`.
pub fn n_fwd(g: &Geometry) -> Result<f64> {
    let k = mu_c_consistency(g, &[0.5, 1.0, 2.0, 4.0])?.constant;
    Ok(match g.parity {
        Parity::Even => 2.0 / (std::f64::consts::PI * k),
        Parity::Odd => 1.0 / (2.0 * std::f64::consts::PI * k),
    })
}

/// Dense transform pair between fixed `s` and `r` grids. The component
/// values are tabulated once; forward and inverse reuse them.
#[derive(Debug, Clone)]
pub struct Transform {
    geometry: Geometry,
    s_grid: Vec<f64>,
    r_grid: Vec<f64>,
    // quadrature weight times Cartan density on the s grid
    s_weight: Vec<f64>,
    // quadrature weight times mu on the r grid
    r_weight: Vec<f64>,
    // row-major r x s tables of the even term and the tilde magnitude
    even: Vec<f64>,
    tilde: Vec<f64>,
    n_fwd: f64,
}

impl Transform {
    /// Default grids: 2048 points on `[0, 20]` and 4096 on `[0, 40]`.
    pub fn default_grids() -> (Vec<f64>, Vec<f64>) {
        (uniform_grid(0.0, 20.0, 2048), uniform_grid(0.0, 40.0, 4096))
    }

    pub fn new(geometry: Geometry, s_grid: Vec<f64>, r_grid: Vec<f64>) -> Result<Self> {
        Self::with_normalization(geometry, s_grid, r_grid, n_fwd(&geometry)?)
    }

    pub fn with_normalization(geometry: Geometry, s_grid: Vec<f64>, r_grid: Vec<f64>, n_fwd: f64) -> Result<Self> {
        check_grid(&s_grid, "s", S_MAX_LIMIT)?;
        check_grid(&r_grid, "r", f64::MAX)?;
        let r_max = r_grid[r_grid.len() - 1];
        let step = s_grid.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
        let limit = 2.0 * std::f64::consts::PI / (POINTS_PER_PERIOD * r_max);
        if step > limit {
            return Err(Error::Undersampled { step, limit });
        }
        let g = geometry;
        let s_weight = grid_weights(&s_grid).iter().zip(&s_grid).map(|(w, &s)| w * cartan_density(&g, s)).collect();
        let r_weight =
            trapezoid_weights(&r_grid).iter().zip(&r_grid).map(|(w, &r)| w * plancherel_density(&g, r)).collect();
        let ns = s_grid.len();
        let odd = g.parity == Parity::Odd;
        let mut even = vec![0.0; r_grid.len() * ns];
        let mut tilde = vec![0.0; if odd { r_grid.len() * ns } else { 0 }];
        let rows: Vec<Result<(Vec<f64>, Vec<f64>)>> =
            r_grid.par_iter().map(|&r| components_on_grid(&g, r, &s_grid)).collect();
        for (i, row) in rows.into_iter().enumerate() {
            let (e, t) = row?;
            even[i * ns..(i + 1) * ns].copy_from_slice(&e);
            if odd {
                tilde[i * ns..(i + 1) * ns].copy_from_slice(&t);
            }
        }
        Ok(Self { geometry, s_grid, r_grid, s_weight, r_weight, even, tilde, n_fwd })
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn s_grid(&self) -> &[f64] {
        &self.s_grid
    }

    pub fn r_grid(&self) -> &[f64] {
        &self.r_grid
    }

    pub fn n_fwd(&self) -> f64 {
        self.n_fwd
    }

    /// `H(r) = N int f(s) conj(phi(r, s)) (2 sinh s)^{n-1} ds`; for odd `n`
    /// the pair `(H_+, H_-)` pairs `f` with the `+` components of both signs.
    pub fn forward(&self, f: &RadialProfile) -> Result<SpectralCoefficients> {
        if f.geometry != self.geometry || f.s_grid != self.s_grid {
            return Err(Error::Parameter("profile grid does not match the transform".into()));
        }
        let ns = self.s_grid.len();
        let fw: Vec<Complex64> = f.values.iter().zip(&self.s_weight).map(|(v, w)| v * w).collect();
        let odd = self.geometry.parity == Parity::Odd;
        let rows: Vec<(Complex64, Complex64)> = (0..self.r_grid.len())
            .into_par_iter()
            .map(|i| {
                let e = &self.even[i * ns..(i + 1) * ns];
                let a: Complex64 = fw.iter().zip(e).map(|(x, y)| x * y).sum();
                let b: Complex64 = if odd {
                    let t = &self.tilde[i * ns..(i + 1) * ns];
                    fw.iter().zip(t).map(|(x, y)| x * y).sum()
                } else {
                    Complex64::new(0.0, 0.0)
                };
                let i_b = Complex64::i() * b;
                (self.n_fwd * (a + i_b), self.n_fwd * (a - i_b))
            })
            .collect();
        let plus = rows.iter().map(|p| p.0).collect();
        let minus = odd.then(|| rows.iter().map(|p| p.1).collect());
        SpectralCoefficients::new(self.geometry, self.r_grid.clone(), plus, minus)
    }

    /// Inverse with the tail test on `|h(R_max)| mu(R_max)`.
    pub fn inverse(&self, h: &SpectralCoefficients) -> Result<RadialProfile> {
        let rel = self.tail_ratio(h)?;
        if rel > TAIL_TOL {
            return Err(Error::Truncation(rel));
        }
        self.inverse_unchecked(h)
    }

    /// `|h(R_max)| mu(R_max)` relative to its maximum over the grid.
    pub fn tail_ratio(&self, h: &SpectralCoefficients) -> Result<f64> {
        self.check_coefficients(h)?;
        let mag = |i: usize| {
            let m = h.minus.as_ref().map_or(0.0, |m| m[i].norm());
            h.plus[i].norm().max(m) * plancherel_density(&self.geometry, self.r_grid[i])
        };
        let peak = (0..self.r_grid.len()).map(mag).fold(0.0, f64::max);
        if peak == 0.0 {
            return Ok(0.0);
        }
        Ok(mag(self.r_grid.len() - 1) / peak)
    }

    /// `f(s) = int (H_+ phi_+ + H_- phi_-) mu dr` without the tail test.
    pub fn inverse_unchecked(&self, h: &SpectralCoefficients) -> Result<RadialProfile> {
        self.combine(h, 1.0)
    }

    /// The second scalar component `int (H_+ phi_+^- + H_- phi_-^-) mu dr` of
    /// the spinor field for odd `n`; it vanishes for data built by `forward`.
    pub fn partner(&self, h: &SpectralCoefficients) -> Result<RadialProfile> {
        if h.minus.is_none() {
            return Err(Error::Parity(format!("partner component needs odd n, got n = {}", h.geometry.n)));
        }
        self.combine(h, -1.0)
    }

    fn combine(&self, h: &SpectralCoefficients, sign: f64) -> Result<RadialProfile> {
        self.check_coefficients(h)?;
        let ns = self.s_grid.len();
        let nr = self.r_grid.len();
        // phi_+ = E - iT and phi_- = E + iT on the first component, conjugated
        // on the second: f = sum (H_+ + H_-) E -/+ i (H_+ - H_-) T
        let (a, b): (Vec<Complex64>, Vec<Complex64>) = match &h.minus {
            Some(m) => (0..nr)
                .map(|i| {
                    let w = self.r_weight[i];
                    ((h.plus[i] + m[i]) * w, Complex64::new(0.0, -sign) * (h.plus[i] - m[i]) * w)
                })
                .unzip(),
            None => (0..nr).map(|i| (h.plus[i] * self.r_weight[i], Complex64::new(0.0, 0.0))).unzip(),
        };
        let odd = h.minus.is_some();
        let values: Vec<Complex64> = (0..ns)
            .into_par_iter()
            .map(|j| {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..nr {
                    acc += a[i] * self.even[i * ns + j];
                    if odd {
                        acc += b[i] * self.tilde[i * ns + j];
                    }
                }
                acc
            })
            .collect();
        RadialProfile::new(self.geometry, self.s_grid.clone(), values)
    }

    fn check_coefficients(&self, h: &SpectralCoefficients) -> Result<()> {
        if h.geometry != self.geometry || h.r_grid != self.r_grid {
            return Err(Error::Parameter("coefficient grid does not match the transform".into()));
        }
        Ok(())
    }

    /// Least-squares normalization making `inverse(forward(f)) = f` for this
    /// transform's tables.
    pub fn calibrate(&self, f: &RadialProfile) -> Result<f64> {
        let unit = Self { n_fwd: 1.0, ..self.clone() };
        let back = unit.inverse_unchecked(&unit.forward(f)?)?;
        let w = grid_weights(&self.s_grid);
        let mut num = Complex64::new(0.0, 0.0);
        let mut den = 0.0;
        for j in 0..self.s_grid.len() {
            let m = w[j] * cartan_density(&self.geometry, self.s_grid[j]);
            num += back.values[j].conj() * f.values[j] * m;
            den += back.values[j].norm_sqr() * m;
        }
        Ok(num.re / den)
    }
}

/// `forward` on the profile's own grid and the default `r` grid.
pub fn forward_transform(f: &RadialProfile) -> Result<SpectralCoefficients> {
    let r = Transform::default_grids().1;
    Transform::new(f.geometry, f.s_grid.clone(), r)?.forward(f)
}

pub fn inverse_transform(h: &SpectralCoefficients, s_grid: &[f64]) -> Result<RadialProfile> {
    Transform::new(h.geometry, s_grid.to_vec(), h.r_grid.clone())?.inverse(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralSign {
    Plus,
    Minus,
}

/// Projection onto the nonnegative (`Plus`) or negative (`Minus`) spectrum of `D`.
pub fn spectral_project(h: &SpectralCoefficients, sign: SpectralSign) -> Result<SpectralCoefficients> {
    if h.minus.is_none() {
        return Err(Error::Parity(format!(
            "the spectral sign splitting is only explicit for odd n, got n = {}",
            h.geometry.n
        )));
    }
    let zero = Complex64::new(0.0, 0.0);
    Ok(h.map(|_, v, plus| if plus == (sign == SpectralSign::Plus) { v } else { zero }))
}

/// Multiplies by `(r^2 + r0)^{-theta/2} e^{itr}`.
pub fn evolve_half_wave(h: &SpectralCoefficients, t: f64, theta: SmoothingOrder) -> SpectralCoefficients {
    let r0 = h.geometry.r0;
    let th = theta.value();
    h.map(|r, v, _| {
        let sym = if th == Complex64::new(0.0, 0.0) {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(r * r + r0, 0.0).powc(-0.5 * th)
        };
        v * sym * Complex64::new(0.0, t * r).exp()
    })
}

/// The signed flow `e^{itD}`: `e^{itr}` on `H_+` and `e^{-itr}` on `H_-`.
pub fn evolve_dirac(h: &SpectralCoefficients, t: f64) -> Result<SpectralCoefficients> {
    if h.minus.is_none() {
        return Err(Error::Parity(format!("e^{{itD}} needs odd n, got n = {}", h.geometry.n)));
    }
    Ok(h.map(|r, v, plus| v * Complex64::new(0.0, if plus { t * r } else { -t * r }).exp()))
}

/// `(int |f|^q (2 sinh s)^{n-1} ds)^{1/q}`, or `max |f|` for `q = inf`.
pub fn norm_track(f: &RadialProfile, q: f64) -> Result<f64> {
    if !(q >= 1.0) {
        return Err(Error::Parameter(format!("norm exponent must be in [1, inf], got {q}")));
    }
    if q.is_infinite() {
        return Ok(f.values.iter().map(|v| v.norm()).fold(0.0, f64::max));
    }
    let w = grid_weights(&f.s_grid);
    let acc: f64 = f
        .values
        .iter()
        .zip(&f.s_grid)
        .zip(&w)
        .map(|((v, &s), w)| v.norm().powf(q) * w * cartan_density(&f.geometry, s))
        .sum();
    Ok(acc.powf(1.0 / q))
}

/// Named test profiles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileShape {
    /// `e^{-a (s - c)^2}`
    Gaussian { center: f64, sharpness: f64 },
    /// `e^{-(s / w)^2}`, a smoothed delta at the origin
    Narrow { width: f64 },
    /// `e^{-2 (s - 4)^2} cos(4s)`
    Oscillatory,
    /// `e^{-3 (s - 3)^2} e^{2is}`
    Chirp,
    /// `e^{-2 (s - 3)^2} - e^{-2 (s - 5.5)^2} / 2`
    TwoBump,
    /// `e^{-(s - 5)^2} (1 + sin(3s) / 2)`
    Modulated,
    /// `e^{-2 (s - 3)^2} - c e^{-2 (s - 5.5)^2}` with `c` chosen so that the
    /// transform vanishes at `r = 0`
    Balanced,
}

impl ProfileShape {
    pub const GAUSSIAN: ProfileShape = ProfileShape::Gaussian { center: 3.0, sharpness: 4.0 };
    pub const NARROW: ProfileShape = ProfileShape::Narrow { width: 0.05 };
    pub const NAMES: [&'static str; 7] =
        ["gaussian", "narrow", "oscillatory", "chirp", "twobump", "modulated", "balanced"];

    pub fn name(self) -> &'static str {
        match self {
            ProfileShape::Gaussian { .. } => "gaussian",
            ProfileShape::Narrow { .. } => "narrow",
            ProfileShape::Oscillatory => "oscillatory",
            ProfileShape::Chirp => "chirp",
            ProfileShape::TwoBump => "twobump",
            ProfileShape::Modulated => "modulated",
            ProfileShape::Balanced => "balanced",
        }
    }

    /// Shape by name with default parameters.
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "gaussian" => Self::GAUSSIAN,
            "narrow" => Self::NARROW,
            "oscillatory" => ProfileShape::Oscillatory,
            "chirp" => ProfileShape::Chirp,
            "twobump" => ProfileShape::TwoBump,
            "modulated" => ProfileShape::Modulated,
            "balanced" => ProfileShape::Balanced,
            _ => return None,
        })
    }

    /// Value at `s`; `Balanced` needs the geometry and goes through `sample`.
    pub fn eval(self, s: f64) -> Complex64 {
        self.eval_with(s, 0.0)
    }

    fn eval_with(self, s: f64, c: f64) -> Complex64 {
        let re = |x: f64| Complex64::new(x, 0.0);
        match self {
            ProfileShape::Gaussian { center, sharpness } => re((-sharpness * (s - center).powi(2)).exp()),
            ProfileShape::Narrow { width } => re((-(s / width).powi(2)).exp()),
            ProfileShape::Oscillatory => re((-2.0 * (s - 4.0).powi(2)).exp() * (4.0 * s).cos()),
            ProfileShape::Chirp => (-3.0 * (s - 3.0).powi(2)).exp() * Complex64::new(0.0, 2.0 * s).exp(),
            ProfileShape::TwoBump => re((-2.0 * (s - 3.0).powi(2)).exp() - 0.5 * (-2.0 * (s - 5.5).powi(2)).exp()),
            ProfileShape::Modulated => re((-(s - 5.0).powi(2)).exp() * (1.0 + 0.5 * (3.0 * s).sin())),
            ProfileShape::Balanced => re((-2.0 * (s - 3.0).powi(2)).exp() - c * (-2.0 * (s - 5.5).powi(2)).exp()),
        }
    }

    pub fn sample(self, g: Geometry, s_grid: Vec<f64>) -> Result<RadialProfile> {
        let c = if self == ProfileShape::Balanced { balance_constant(&g)? } else { 0.0 };
        RadialProfile::from_fn(g, s_grid, |s| self.eval_with(s, c))
    }
}

// ratio of the r = 0 transforms of the two bumps of `Balanced`
fn balance_constant(g: &Geometry) -> Result<f64> {
    let s = uniform_grid(0.0, 12.0, 4801);
    let w = grid_weights(&s);
    let (e0, _) = components_on_grid(g, 0.0, &s)?;
    let moment = |c: f64| -> f64 {
        s.iter()
            .zip(&w)
            .zip(&e0)
            .map(|((&x, w), e)| (-2.0 * (x - c).powi(2)).exp() * e * w * cartan_density(g, x))
            .sum()
    };
    Ok(moment(3.0) / moment(5.5))
}
