//! Smoothed propagator kernel `(D^2 + r0)^{-theta/2} e^{it|D|}` reduced to
//! scalar components, its low/high-frequency pieces, log-log decay fits and
//! the Kunze-Stein norm quadrature.

pub mod quad;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{c_jacobi, HcSeries, JacobiParams};
use crate::spectral::{plancherel_density, plancherel_density_complex, Geometry, Parity};
use crate::spherical::{ground_spherical_grid, phi_tilde, scalar_even, SphericalKind};

use quad::{adaptive, kronrod_nodes};

/// Complex smoothing exponent `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothingOrder {
    pub re: f64,
    pub im: f64,
}

impl SmoothingOrder {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !(re >= 0.0) || !re.is_finite() || !im.is_finite() {
            return Err(Error::Parameter(format!("smoothing order needs Re >= 0, got {re}+{im}i")));
        }
        Ok(Self { re, im })
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    /// `(n+1)/2`.
    pub fn critical(g: &Geometry) -> Self {
        Self { re: g.critical_theta(), im: 0.0 }
    }

    pub fn value(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutoffKind {
    Chi0,
    ChiInf,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffSpec {
    pub kind: CutoffKind,
    pub scale: f64,
}

impl CutoffSpec {
    pub fn chi0(scale: f64) -> Self {
        Self { kind: CutoffKind::Chi0, scale }
    }

    pub fn chi_inf(scale: f64) -> Self {
        Self { kind: CutoffKind::ChiInf, scale }
    }
}

fn bump_edge(u: f64) -> f64 {
    if u > 0.0 {
        (-1.0 / u).exp()
    } else {
        0.0
    }
}

/// Unit-scale `chi0`: 1 on `[0, 1/2]`, 0 on `[1, inf)`.
fn chi0(x: f64) -> f64 {
    let u = 2.0 * x - 1.0;
    if u <= 0.0 {
        return 1.0;
    }
    if u >= 1.0 {
        return 0.0;
    }
    let a = bump_edge(1.0 - u);
    (a / (a + bump_edge(u))).clamp(0.0, 1.0)
}

pub fn cutoff(spec: CutoffSpec, r: f64) -> f64 {
    let v = chi0(spec.scale * r);
    match spec.kind {
        CutoffKind::Chi0 => v,
        CutoffKind::ChiInf => 1.0 - v,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    I0,
    IinfMinus,
    IinfPlus,
    Total,
}

impl Piece {
    pub const SPLIT: [Piece; 3] = [Piece::I0, Piece::IinfMinus, Piece::IinfPlus];

    pub fn name(self) -> &'static str {
        match self {
            Piece::I0 => "I0",
            Piece::IinfMinus => "Iinf_minus",
            Piece::IinfPlus => "Iinf_plus",
            Piece::Total => "total",
        }
    }

    fn weight(self, t: f64, r: f64) -> f64 {
        let at = t.abs();
        match self {
            Piece::I0 => chi0(r),
            Piece::IinfMinus => chi0(at * r) * (1.0 - chi0(r)),
            Piece::IinfPlus => (1.0 - chi0(at * r)) * (1.0 - chi0(r)),
            Piece::Total => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSample {
    pub t: f64,
    pub s: f64,
    pub theta: SmoothingOrder,
    pub piece: Piece,
    pub value: Complex64,
    /// Smallest damping used in the extrapolation; 0 when no damped tail entered.
    pub damping_eps: f64,
    pub est_error: f64,
    /// The same integral with the tail taken undamped along the rotated contour.
    pub direct: Complex64,
}

/// Default first damping parameter of the tail extrapolation.
pub const EPS0: f64 = 0.1;

const NEAR_REL_TOL: f64 = 1e-11;
const NEAR_ABS_TOL: f64 = 1e-15;
const MAX_PANELS: usize = 20_000;

/// Kernel evaluator for one geometry, smoothing order and scalar component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kernel {
    pub geometry: Geometry,
    pub theta: SmoothingOrder,
    pub kind: SphericalKind,
    pub eps0: f64,
}

/// Damping ladder `eps_k = eps0 / 2^k`; the extrapolation uses the first
/// window of four consecutive values that meets the error threshold.
pub const LADDER: usize = 12;

struct TailValue {
    // damped values on the ladder
    ladder: [Complex64; LADDER],
    direct: Complex64,
    quad_error: f64,
}

impl TailValue {
    fn constant(v: Complex64, quad_error: f64) -> Self {
        Self { ladder: [v; LADDER], direct: v, quad_error }
    }

    fn add(mut self, o: TailValue) -> Self {
        for (a, b) in self.ladder.iter_mut().zip(o.ladder) {
            *a += b;
        }
        self.direct += o.direct;
        self.quad_error += o.quad_error;
        self
    }
}

impl Kernel {
    /// Kernel evaluation is supported for `n <= 5` and `|Im theta| <= 5`.
    pub fn new(geometry: Geometry, theta: SmoothingOrder, kind: SphericalKind) -> Result<Self> {
        if geometry.n > 5 {
            return Err(Error::Parameter(format!("kernel evaluation supports n in 2..=5, got {}", geometry.n)));
        }
        if theta.im.abs() > 5.0 {
            return Err(Error::Parameter(format!("|Im theta| must be <= 5, got {}", theta.im)));
        }
        let ok = match kind {
            SphericalKind::EvenPm => true,
            SphericalKind::Ground => false,
            _ => geometry.parity == Parity::Odd,
        };
        if !ok {
            return Err(Error::Parity(format!(
                "component {} is not a kernel component for n = {}",
                kind.name(),
                geometry.n
            )));
        }
        Ok(Self { geometry, theta, kind, eps0: EPS0 })
    }

    /// The natural component: even term for even `n`, `phi_+^+` for odd `n`.
    pub fn default_kind(g: &Geometry) -> SphericalKind {
        match g.parity {
            Parity::Even => SphericalKind::EvenPm,
            Parity::Odd => SphericalKind::OddPlusPlus,
        }
    }

    fn ladder_eps(&self) -> [f64; LADDER] {
        let mut e = [self.eps0; LADDER];
        for k in 1..LADDER {
            e[k] = e[k - 1] / 2.0;
        }
        e
    }

    pub fn with_eps0(mut self, eps0: f64) -> Self {
        self.eps0 = eps0;
        self
    }

    /// `(r^2 + r0)^{-theta/2} mu(r)` on the real axis.
    fn symbol_real(&self, r: f64) -> Complex64 {
        let g = &self.geometry;
        let l = (r * r + g.r0).ln();
        (-0.5 * self.theta.value() * l).exp() * plancherel_density(g, r)
    }

    fn symbol(&self, r: Complex64) -> Complex64 {
        let g = &self.geometry;
        (-0.5 * self.theta.value() * (r * r + g.r0).ln()).exp() * plancherel_density_complex(g, r)
    }

    fn component(&self, r: f64, s: f64) -> Result<Complex64> {
        let g = &self.geometry;
        let e = scalar_even(g, r, s)?;
        let sign = self.kind.tilde_sign();
        if sign == 0.0 || s == 0.0 {
            return Ok(e);
        }
        Ok(e + sign * phi_tilde(g, r, s)?)
    }

    /// Amplitude of the `e^{i dir r s}` wave in the component, `dir = +/-1`,
    /// with the summed magnitude of its terms (the two can cancel for odd kinds).
    fn amplitude(&self, r: Complex64, s: f64, dir: f64) -> Result<(Complex64, f64)> {
        let g = &self.geometry;
        let n = g.nf();
        let lam = 2.0 * dir * r;
        let h = s / 2.0;
        let damp = (-n * h).exp();
        let pj = JacobiParams::spinor(g.n);
        let sj = HcSeries::new(pj, lam, h)?.sum(h);
        let mut v = h.cosh() * damp * c_jacobi(pj, lam)? * sj;
        let mut gross = v.norm();
        let sign = self.kind.tilde_sign();
        if sign != 0.0 {
            let pt = JacobiParams::spinor_tilde(g.n);
            let st = HcSeries::new(pt, lam, h)?.sum(h);
            let w = sign * Complex64::i() * (2.0 * r / n) * h.sinh() * damp * c_jacobi(pt, lam)? * st;
            gross += w.norm();
            v += w;
        }
        Ok((v, gross))
    }

    fn check(&self, piece: Piece, t: f64, s: f64) -> Result<()> {
        if t == 0.0 || !t.is_finite() {
            return Err(Error::Domain("t must be nonzero".into()));
        }
        if !(s >= 0.0) || !s.is_finite() {
            return Err(Error::Domain(format!("geodesic radius must be >= 0, got {s}")));
        }
        let crit = self.geometry.critical_theta();
        if matches!(piece, Piece::IinfPlus | Piece::Total) && self.theta.re < crit {
            return Err(Error::Parameter(format!(
                "piece {} needs Re theta >= {crit}, got {}",
                piece.name(),
                self.theta.re
            )));
        }
        Ok(())
    }

    /// Handoff point between the real-axis quadrature and the oscillatory tail.
    pub fn r_split(t: f64) -> f64 {
        4.0f64.max(8.0 / t.abs())
    }

    fn near(&self, piece: Piece, t: f64, s: f64, a: f64, b: f64) -> Result<quad::QuadResult<1>> {
        if b <= a {
            return Ok(quad::QuadResult { values: [Complex64::new(0.0, 0.0)], error: 0.0, abs: 0.0 });
        }
        let at = t.abs();
        let mut marks = vec![a, b];
        for m in [0.5, 1.0, 0.5 / at, 1.0 / at] {
            if m > a && m < b {
                marks.push(m);
            }
        }
        marks.sort_by(f64::total_cmp);
        let step = 1.0f64.min(std::f64::consts::PI / (at + s + 1.0));
        let mut breaks = vec![a];
        for w in marks.windows(2) {
            let k = ((w[1] - w[0]) / step).ceil().max(1.0) as usize;
            for i in 1..=k {
                breaks.push(w[0] + (w[1] - w[0]) * i as f64 / k as f64);
            }
        }
        adaptive(
            |r: f64| {
                let w = piece.weight(t, r);
                if w == 0.0 {
                    return Ok([Complex64::new(0.0, 0.0)]);
                }
                let ph = Complex64::new(0.0, t * r).exp();
                Ok([w * self.symbol_real(r) * ph * self.component(r, s)?])
            },
            &breaks,
            NEAR_ABS_TOL,
            NEAR_REL_TOL,
            MAX_PANELS,
        )
    }

    /// `int_{r0}^inf symbol(r) amp(r) e^{i xi r} dr` with `amp` analytic for `Re r > 0`.
    fn tail_phase<A>(&self, amp: A, xi: f64, r0: f64) -> Result<TailValue>
    where
        A: Fn(Complex64) -> Result<(Complex64, f64)>,
    {
        if xi == 0.0 {
            return self.tail_light_cone(amp, r0);
        }
        let sigma = xi.signum();
        let ax = xi.abs();
        let eps = self.ladder_eps();
        // r = r0 + i sigma u / |xi|, so e^{i xi r} = e^{i xi r0} e^{-u}
        let breaks = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 24.0, 32.0, 48.0, 64.0];
        let jac = Complex64::new(0.0, sigma / ax);
        let res = adaptive(
            |u: f64| {
                let dy = Complex64::new(0.0, sigma * u / ax);
                let r = r0 + dy;
                let sym = self.symbol(r) * (-u).exp() * jac;
                let (a, gross) = amp(r)?;
                let base = sym * a;
                // slot 0 carries the scale for the tolerance, slot 1 the undamped value
                let mut out = [base; LADDER + 2];
                out[0] = Complex64::new(sym.norm() * gross, 0.0);
                for (k, e) in eps.iter().enumerate() {
                    out[k + 2] = base * (-e * dy).exp();
                }
                Ok(out)
            },
            &breaks,
            1e-300,
            1e-12,
            MAX_PANELS,
        )?;
        let ph = Complex64::new(0.0, xi * r0).exp();
        let mut ladder = [Complex64::new(0.0, 0.0); LADDER];
        for k in 0..LADDER {
            ladder[k] = res.values[k + 2] * ph;
        }
        Ok(TailValue { ladder, direct: res.values[1] * ph, quad_error: res.error })
    }

    /// Non-oscillating tail (`s = |t|`): absolutely convergent only above the
    /// critical smoothing, integrated in `r = r0 e^v` with a power-law remainder.
    fn tail_light_cone<A>(&self, amp: A, r0: f64) -> Result<TailValue>
    where
        A: Fn(Complex64) -> Result<(Complex64, f64)>,
    {
        let delta = self.theta.re - self.geometry.critical_theta();
        if delta <= 0.0 {
            return Err(Error::Divergence(format!(
                "non-oscillating tail on the light cone s = |t| needs Re theta > {}",
                self.geometry.critical_theta()
            )));
        }
        // beyond r ~ 1e6 the integrand is its leading power law to O(1/r)
        let v_max = (1e6 / r0).ln().max(4.0);
        let f = |v: f64| -> Result<[Complex64; 2]> {
            let r = r0 * v.exp();
            let rc = Complex64::new(r, 0.0);
            let sym = self.symbol(rc) * r;
            let (a, gross) = amp(rc)?;
            Ok([Complex64::new(sym.norm() * gross, 0.0), sym * a])
        };
        let mut breaks = vec![0.0];
        let mut x = 0.0;
        while x < v_max {
            x = (x + 1.0).min(v_max);
            breaks.push(x);
        }
        // the amplitude is only good to ~1e-13 here, so 1e-12 can stall
        let res = adaptive(f, &breaks, 1e-300, 1e-10, MAX_PANELS)?;
        // integrand ~ A r^{-1 - delta - i gamma}: remainder F(r_max) r_max / (delta + i gamma)
        let rem = f(v_max)?[1] / Complex64::new(delta, self.theta.im);
        Ok(TailValue::constant(res.values[1] + rem, res.error + 1e-5 * rem.norm()))
    }

    fn tail(&self, t: f64, s: f64, r0: f64) -> Result<TailValue> {
        if s == 0.0 {
            return self.tail_phase(|_| Ok((Complex64::new(1.0, 0.0), 1.0)), t, r0);
        }
        let plus = self.tail_phase(|r| self.amplitude(r, s, 1.0), t + s, r0)?;
        let minus = self.tail_phase(|r| self.amplitude(r, s, -1.0), t - s, r0)?;
        Ok(plus.add(minus))
    }

    pub fn piece(&self, piece: Piece, t: f64, s: f64) -> Result<KernelSample> {
        self.check(piece, t, s)?;
        let at = t.abs();
        let rs = Self::r_split(t);
        let (a, b, tail) = match piece {
            Piece::I0 => (0.0, 1.0, false),
            Piece::IinfMinus => (0.5, 1.0 / at, false),
            Piece::IinfPlus => (0.5f64.max(0.5 / at), rs, true),
            Piece::Total => (0.0, rs, true),
        };
        let near = self.near(piece, t, s, a, b)?;
        let base = near.values[0];
        let mut out = KernelSample {
            t,
            s,
            theta: self.theta,
            piece,
            value: base,
            damping_eps: 0.0,
            est_error: near.error,
            direct: base,
        };
        if !tail {
            return Ok(out);
        }
        let tv = self.tail(t, s, rs)?;
        let eps = self.ladder_eps();
        out.direct = base + tv.direct;
        let mut best: Option<(f64, Complex64, f64)> = None;
        for j in 0..=LADDER - 4 {
            let p3 = neville_at_zero(&eps[j..j + 4], &tv.ladder[j..j + 4]);
            let p2 = neville_at_zero(&eps[j + 1..j + 4], &tv.ladder[j + 1..j + 4]);
            let err = near.error + tv.quad_error + (p3 - p2).norm();
            let value = base + p3;
            if best.map_or(true, |b| err < b.0) {
                best = Some((err, value, eps[j + 3]));
            }
            if err <= 1e-4 * value.norm() + 1e-10 {
                break;
            }
        }
        let (err, value, e) = best.unwrap();
        if err > 1e-4 * value.norm() + 1e-10 {
            return Err(Error::NonConvergence { est_error: err, magnitude: value.norm() });
        }
        out.value = value;
        out.est_error = err;
        out.damping_eps = e;
        Ok(out)
    }

    /// Sum of the three pieces with their errors added.
    pub fn total(&self, t: f64, s: f64) -> Result<KernelSample> {
        self.check(Piece::Total, t, s)?;
        let mut out = KernelSample {
            t,
            s,
            theta: self.theta,
            piece: Piece::Total,
            value: Complex64::new(0.0, 0.0),
            damping_eps: 0.0,
            est_error: 0.0,
            direct: Complex64::new(0.0, 0.0),
        };
        for p in Piece::SPLIT {
            let k = self.piece(p, t, s)?;
            out.value += k.value;
            out.direct += k.direct;
            out.est_error += k.est_error;
            out.damping_eps = out.damping_eps.max(k.damping_eps);
        }
        Ok(out)
    }
}

/// Value at 0 of the interpolating polynomial through `(xs, ys)`.
fn neville_at_zero(xs: &[f64], ys: &[Complex64]) -> Complex64 {
    let mut p = ys.to_vec();
    let m = xs.len();
    for k in 1..m {
        for i in 0..m - k {
            p[i] = (xs[i + k] * p[i] - xs[i] * p[i + 1]) / (xs[i + k] - xs[i]);
        }
    }
    p[0]
}

/// One piece for the natural component of `g`.
pub fn kernel_piece(g: &Geometry, theta: SmoothingOrder, piece: Piece, t: f64, s: f64) -> Result<KernelSample> {
    Kernel::new(*g, theta, Kernel::default_kind(g))?.piece(piece, t, s)
}

/// `I0 + Iinf_minus + Iinf_plus` for the natural component of `g`.
pub fn kernel_total(g: &Geometry, theta: SmoothingOrder, t: f64, s: f64) -> Result<KernelSample> {
    Kernel::new(*g, theta, Kernel::default_kind(g))?.total(t, s)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayFit {
    pub slope: f64,
    pub intercept: f64,
    pub rsquared: f64,
    pub window: (f64, f64),
}

/// Least squares of `ln magnitude` against `ln t` over samples with `t` in `window`.
pub fn decay_fit(samples: &[(f64, f64)], window: (f64, f64)) -> Result<DecayFit> {
    let (lo, hi) = window;
    if !(lo > 0.0 && lo < hi) {
        return Err(Error::Parameter(format!("invalid fit window [{lo}, {hi}]")));
    }
    let inside: Vec<(f64, f64)> = samples.iter().copied().filter(|(t, _)| *t >= lo && *t <= hi).collect();
    if inside.len() < 5 {
        return Err(Error::InsufficientSamples { need: 5, got: inside.len() });
    }
    if let Some(&(_, m)) = inside.iter().find(|(_, m)| !(*m > 0.0)) {
        return Err(Error::NonPositive(m));
    }
    let xs: Vec<f64> = inside.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = inside.iter().map(|p| p.1.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Parameter("all samples share one t".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sst: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let sse: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
    let rsquared = if sst == 0.0 { 1.0 } else { (1.0 - sse / sst).clamp(0.0, 1.0) };
    Ok(DecayFit { slope, intercept, rsquared, window })
}

/// Largest radius of the Kunze-Stein quadrature.
pub const KS_S_MAX: f64 = 100.0;

/// `(int |k(s)|^{q/2} phi_0(s) (2 sinh s)^{n-1} ds)^{2/q}` on `[0, S]`, with
/// `S <= 100` the first unit breakpoint where the estimated remainder is
/// below `1e-12` of the running integral.
pub fn ks_norm_bound<F: Fn(f64) -> f64>(g: &Geometry, kernel_profile: F, q: f64) -> Result<f64> {
    if !(q >= 1.0) || !q.is_finite() {
        return Err(Error::Parameter(format!("q must be finite and >= 1, got {q}")));
    }
    let panels = KS_S_MAX as usize;
    let mut nodes = Vec::with_capacity(15 * panels + 1);
    for k in 0..panels {
        let mut p = kronrod_nodes(k as f64, k as f64 + 1.0);
        p.sort_by(|a, b| a.0.total_cmp(&b.0));
        nodes.extend_from_slice(&p);
    }
    let edges: Vec<f64> = (0..=panels).map(|k| k as f64).collect();
    let mut all: Vec<f64> = nodes.iter().map(|p| p.0).chain(edges.iter().copied()).collect();
    all.sort_by(f64::total_cmp);
    all.dedup();
    let phi0 = ground_spherical_grid(g, &all)?;
    let n1 = g.nf() - 1.0;
    let integrand = |s: f64, p0: f64| -> f64 {
        let k = kernel_profile(s).abs();
        if k == 0.0 || p0 == 0.0 {
            return 0.0;
        }
        if s == 0.0 {
            return if n1 == 0.0 { k.powf(q / 2.0) * p0 } else { 0.0 };
        }
        let lw = n1 * (s + (-(-2.0 * s).exp()).ln_1p());
        (0.5 * q * k.ln() + p0.ln() + lw).exp()
    };
    let lookup = |s: f64| -> f64 {
        let i = all.partition_point(|x| *x < s);
        phi0[i]
    };
    let edge_vals: Vec<f64> = edges.iter().map(|&s| integrand(s, lookup(s))).collect();
    let mut total = 0.0;
    let mut comp = 0.0;
    for k in 0..panels {
        let mut part = 0.0;
        for &(s, w) in &nodes[15 * k..15 * (k + 1)] {
            part += w * integrand(s, lookup(s));
        }
        // Kahan step keeps the running sum order-fixed and accurate
        let y = part - comp;
        let tsum = total + y;
        comp = (tsum - total) - y;
        total = tsum;
        let f_end = edge_vals[k + 1];
        if total > 0.0 && k >= 1 {
            let rate = (edge_vals[k] / f_end).ln();
            let remainder = if f_end == 0.0 {
                0.0
            } else if rate > 0.0 {
                f_end / rate
            } else {
                f64::INFINITY
            };
            if remainder <= 1e-12 * total {
                return Ok(total.powf(2.0 / q));
            }
        }
    }
    if total == 0.0 {
        return Ok(0.0);
    }
    // slow exponential decay: accept with the exponential remainder beyond S_max
    let f_end = edge_vals[panels];
    let rate = (edge_vals[panels - 5] / f_end).ln() / 5.0;
    if f_end > 0.0 && rate > 0.05 {
        return Ok((total + f_end / rate).powf(2.0 / q));
    }
    Err(Error::Divergence(format!("integrand tail does not decay by s = {KS_S_MAX} (local rate {rate:.3e})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_examples() {
        assert_eq!(cutoff(CutoffSpec::chi0(1.0), 0.4), 1.0);
        assert_eq!(cutoff(CutoffSpec::chi0(1.0), 1.2), 0.0);
        let x = 0.73;
        assert!((cutoff(CutoffSpec::chi0(1.0), x) + cutoff(CutoffSpec::chi_inf(1.0), x) - 1.0).abs() < 1e-16);
        assert_eq!(cutoff(CutoffSpec::chi0(4.0), 0.3), 0.0);
        assert_eq!(cutoff(CutoffSpec::chi0(4.0), 0.1), 1.0);
    }

    #[test]
    fn neville_recovers_cubic() {
        let xs = [0.1, 0.05, 0.025, 0.0125];
        let f = |x: f64| Complex64::new(2.0 - x + 3.0 * x * x - x * x * x, x);
        let ys: Vec<Complex64> = xs.iter().map(|&x| f(x)).collect();
        assert!((neville_at_zero(&xs, &ys) - Complex64::new(2.0, 0.0)).norm() < 1e-13);
    }
}
