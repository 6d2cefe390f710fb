//! Adaptive Gauss-Kronrod (7/15) quadrature for several complex integrands
//! sharing nodes.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::CompensatedSum;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// Nodes and weights of the 15-point Kronrod rule mapped to `[a, b]`.
pub fn kronrod_nodes(a: f64, b: f64) -> [(f64, f64); 15] {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut out = [(0.0, 0.0); 15];
    for i in 0..7 {
        out[2 * i] = (c - h * XGK[i], h * WGK[i]);
        out[2 * i + 1] = (c + h * XGK[i], h * WGK[i]);
    }
    out[14] = (c, h * WGK[7]);
    out
}

#[derive(Debug, Clone, Copy)]
struct Panel<const K: usize> {
    a: f64,
    b: f64,
    value: [Complex64; K],
    abs: f64,
    err: f64,
}

fn rule<const K: usize, F>(f: &mut F, a: f64, b: f64) -> Result<Panel<K>>
where
    F: FnMut(f64) -> Result<[Complex64; K]>,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let zero = Complex64::new(0.0, 0.0);
    let mut k = [zero; K];
    let mut g = [zero; K];
    let mut abs = 0.0;
    let fc = f(c)?;
    for j in 0..K {
        k[j] += WGK[7] * fc[j];
        g[j] += WG[3] * fc[j];
    }
    abs += WGK[7] * fc[0].norm();
    for i in 0..7 {
        let f1 = f(c - h * XGK[i])?;
        let f2 = f(c + h * XGK[i])?;
        for j in 0..K {
            k[j] += WGK[i] * (f1[j] + f2[j]);
            if i % 2 == 1 {
                g[j] += WG[i / 2] * (f1[j] + f2[j]);
            }
        }
        abs += WGK[i] * (f1[0].norm() + f2[0].norm());
    }
    let mut err: f64 = 0.0;
    for j in 0..K {
        k[j] *= h;
        err = err.max((k[j] - g[j] * h).norm());
    }
    Ok(Panel { a, b, value: k, abs: abs * h.abs(), err })
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult<const K: usize> {
    pub values: [Complex64; K],
    pub error: f64,
    /// Integral of the magnitude of the first integrand.
    pub abs: f64,
}

/// Integrates `f` over the union of consecutive intervals given by
/// `breaks`, refining the panel with the largest error until the summed
/// error is below `abs_tol + rel_tol * abs`, where `abs` integrates the
/// magnitude of the first component.
pub fn adaptive<const K: usize, F>(
    mut f: F,
    breaks: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Result<QuadResult<K>>
where
    F: FnMut(f64) -> Result<[Complex64; K]>,
{
    let mut panels: Vec<Panel<K>> = Vec::new();
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            panels.push(rule(&mut f, w[0], w[1])?);
        }
    }
    loop {
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let abs: f64 = panels.iter().map(|p| p.abs).sum();
        let tol = abs_tol + rel_tol * abs;
        if err <= tol || panels.is_empty() {
            break;
        }
        if panels.len() >= max_panels {
            let mag = sum_panels(&panels)[0].norm();
            return Err(Error::NonConvergence { est_error: err, magnitude: mag });
        }
        // a panel meeting the relative tolerance on its own magnitude is final;
        // this stops refinement at the noise floor of the integrand
        let (idx, worst) = panels
            .iter()
            .enumerate()
            .filter(|(_, p)| p.err > rel_tol * p.abs)
            .fold((0, -1.0), |acc, (i, p)| if p.err > acc.1 { (i, p.err) } else { acc });
        if worst < 0.0 {
            break;
        }
        let p = panels[idx];
        let m = 0.5 * (p.a + p.b);
        if !(m > p.a && m < p.b) {
            // panel cannot be split further in floating point
            let mag = sum_panels(&panels)[0].norm();
            return Err(Error::NonConvergence { est_error: err, magnitude: mag });
        }
        panels[idx] = rule(&mut f, p.a, m)?;
        panels.push(rule(&mut f, m, p.b)?);
    }
    panels.sort_by(|x, y| x.a.total_cmp(&y.a));
    Ok(QuadResult {
        values: sum_panels(&panels),
        error: panels.iter().map(|p| p.err).sum(),
        abs: panels.iter().map(|p| p.abs).sum(),
    })
}

fn sum_panels<const K: usize>(panels: &[Panel<K>]) -> [Complex64; K] {
    let mut out = [Complex64::new(0.0, 0.0); K];
    for (j, o) in out.iter_mut().enumerate() {
        let mut acc = CompensatedSum::new();
        for p in panels {
            acc.add(p.value[j]);
        }
        *o = acc.value();
    }
    out
}
