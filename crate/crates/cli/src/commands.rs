use std::fs;

use hyperdirac::evolve::{evolve_half_wave, norm_track, uniform_grid, ProfileShape, RadialProfile, Transform};
use hyperdirac::propagator::{decay_fit, Kernel, KernelSample, Piece, SmoothingOrder};
use hyperdirac::spectral::{c_function_raw, c_function_simplified, hc_coefficients, plancherel_density};
use hyperdirac::spherical::{ground_spherical, phi_tilde, scalar_even};
use hyperdirac::strichartz::{is_admissible_square, is_admissible_triangle, regularity_exponent, uniform_pair_grid};
use hyperdirac::{Error, Geometry, Parity};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::table::{fmt_float, Block, Cell, Table};
use crate::{AdmissibleArgs, Cli, Command, DecayArgs, EvolveArgs, Format, KernelArgs, Regime, Smoothing, SpecfunArgs};

pub const EXIT_CONFIG: u8 = 1;
pub const EXIT_NUMERICAL: u8 = 2;
pub const EXIT_VERDICT: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        Self { code: EXIT_CONFIG, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_CONFIG };
        Self { code, message: e.to_string() }
    }
}

type Outcome<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Outcome<u8> {
    if let Some(k) = cli.threads {
        if k == 0 {
            return Err(CliError::config("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::config(format!("thread pool: {e}")))?;
    }
    let (table, code) = match &cli.command {
        Command::Kernel(a) => (kernel(a)?, 0),
        Command::Decay(a) => decay(a)?,
        Command::Evolve(a) => (evolve(a)?, 0),
        Command::Admissible(a) => (admissible(a)?, 0),
        Command::Specfun(a) => (specfun(a)?, 0),
    };
    let text = match cli.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    match &cli.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::config(format!("cannot write {}: {e}", path.display())))?
        }
        None => print!("{text}"),
    }
    Ok(code)
}

fn geometry(n: u32) -> Outcome<Geometry> {
    Ok(Geometry::new(n)?)
}

fn smoothing(g: &Geometry, s: &Smoothing) -> Outcome<SmoothingOrder> {
    Ok(SmoothingOrder::new(s.theta.unwrap_or_else(|| g.critical_theta()), s.theta_im)?)
}

fn theta_text(th: SmoothingOrder) -> String {
    if th.im == 0.0 {
        fmt_float(th.re)
    } else {
        format!("{}{:+}i", fmt_float(th.re), th.im)
    }
}

/// A number, or a fraction `a/b`.
fn number(text: &str) -> Outcome<f64> {
    let text = text.trim();
    let bad = || CliError::config(format!("not a number: {text:?}"));
    match text.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| bad())?;
            let b: f64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0.0 {
                return Err(bad());
            }
            Ok(a / b)
        }
        None => text.parse().map_err(|_| bad()),
    }
}

fn triple(text: &str, what: &str) -> Outcome<(f64, f64, usize)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::config(format!("{what} expects a:b:k, got {text:?}")));
    }
    let k: usize =
        parts[2].trim().parse().map_err(|_| CliError::config(format!("{what}: bad count {:?}", parts[2])))?;
    if k == 0 {
        return Err(CliError::config(format!("{what}: count must be positive")));
    }
    Ok((number(parts[0])?, number(parts[1])?, k))
}

/// Comma-separated values, or `a:b:k` for `k` evenly spaced points.
fn values(text: &str, what: &str) -> Outcome<Vec<f64>> {
    if text.contains(':') {
        let (a, b, k) = triple(text, what)?;
        if k == 1 {
            return Ok(vec![a]);
        }
        return Ok((0..k).map(|i| a + (b - a) * i as f64 / (k - 1) as f64).collect());
    }
    text.split(',').map(number).collect()
}

fn log_values(text: &str) -> Outcome<Vec<f64>> {
    let (a, b, k) = triple(text, "--t-log")?;
    if !(a > 0.0 && b > 0.0) {
        return Err(CliError::config("--t-log endpoints must be positive"));
    }
    if k == 1 {
        return Ok(vec![a]);
    }
    let ratio = b / a;
    Ok((0..k).map(|i| a * ratio.powf(i as f64 / (k - 1) as f64)).collect())
}

fn pieces(name: &str) -> Outcome<Vec<Piece>> {
    let all = [Piece::I0, Piece::IinfMinus, Piece::IinfPlus, Piece::Total];
    match name {
        "split" => Ok(Piece::SPLIT.to_vec()),
        "all" => Ok(all.to_vec()),
        _ => all
            .iter()
            .find(|p| p.name() == name)
            .map(|p| vec![*p])
            .ok_or_else(|| CliError::config(format!("unknown piece {name:?}"))),
    }
}

// Evaluates every task in parallel and keeps the task order.
fn sweep(kernel: &Kernel, tasks: &[(f64, f64, Piece)]) -> Outcome<Vec<KernelSample>> {
    let out: Vec<Result<KernelSample, Error>> = tasks.par_iter().map(|&(t, s, p)| kernel.piece(p, t, s)).collect();
    out.into_iter().map(|r| r.map_err(CliError::from)).collect()
}

fn kernel(a: &KernelArgs) -> Outcome<Table> {
    let g = geometry(a.n)?;
    let th = smoothing(&g, &a.smoothing)?;
    let ts = match (&a.t, &a.t_log) {
        (Some(t), _) => values(t, "--t")?,
        (None, Some(t)) => log_values(t)?,
        (None, None) => return Err(CliError::config("one of --t or --t-log is required")),
    };
    let ss = values(&a.s, "--s")?;
    let ps = pieces(&a.piece)?;
    let k = Kernel::new(g, th, Kernel::default_kind(&g))?;
    let mut tasks = Vec::new();
    for &t in &ts {
        if t == 0.0 {
            return Err(CliError::config("t must be nonzero"));
        }
        for &s in &ss {
            for &p in &ps {
                tasks.push((t, s, p));
            }
        }
    }
    let samples = sweep(&k, &tasks)?;
    let mut table = Table::new("kernel", &["t", "s", "piece", "value_re", "value_im", "est_error"]);
    table.meta("n", g.n);
    table.meta("theta", theta_text(th));
    table.meta(
        "grid",
        format!("t={} s={} pieces={}", a.t.as_deref().or(a.t_log.as_deref()).unwrap_or(""), a.s, a.piece),
    );
    for x in samples {
        table.push(vec![
            x.t.into(),
            x.s.into(),
            x.piece.name().into(),
            x.value.re.into(),
            x.value.im.into(),
            x.est_error.into(),
        ]);
    }
    Ok(table)
}

// (t, magnitude) pairs from a CSV file. A header naming `t` and either
// `magnitude` or `value_re`/`value_im` selects those columns; without one the
// first two columns are used.
fn read_samples(text: &str) -> Outcome<Vec<(f64, f64)>> {
    let mut cols: Option<(usize, Vec<usize>)> = None;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields[0].starts_with(|c: char| c.is_ascii_alphabetic()) {
            let find = |name: &str| fields.iter().position(|f| *f == name);
            let t = find("t").ok_or_else(|| CliError::config("sample header has no t column"))?;
            let v = match (find("magnitude"), find("value_re"), find("value_im")) {
                (Some(m), _, _) => vec![m],
                (None, Some(re), Some(im)) => vec![re, im],
                _ => return Err(CliError::config("sample header needs magnitude or value_re,value_im")),
            };
            cols = Some((t, v));
            continue;
        }
        let (t, v) = cols.clone().unwrap_or((0, vec![1]));
        let get = |i: usize| -> Outcome<f64> {
            fields.get(i).ok_or_else(|| CliError::config(format!("short row {line:?}"))).and_then(|x| number(x))
        };
        let mag = v.iter().map(|&i| get(i).map(|x| x * x)).sum::<Outcome<f64>>()?.sqrt();
        out.push((get(t)?, mag));
    }
    Ok(out)
}

fn decay(a: &DecayArgs) -> Outcome<(Table, u8)> {
    let g = geometry(a.n)?;
    let th = smoothing(&g, &a.smoothing)?;
    let (samples, source) = match &a.from_file {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
            (read_samples(&text)?, format!("file {}", path.display()))
        }
        None => {
            let spec = a.t_log.clone().unwrap_or_else(|| match a.regime {
                Regime::Long => "8:128:33".into(),
                Regime::Short => "1/64:1/4:17".into(),
            });
            let ts = log_values(&spec)?;
            let k = Kernel::new(g, th, Kernel::default_kind(&g))?;
            let ps: &[Piece] = match a.regime {
                Regime::Long => &[Piece::I0],
                Regime::Short => &[Piece::IinfMinus, Piece::IinfPlus],
            };
            let tasks: Vec<_> = ts.iter().flat_map(|&t| ps.iter().map(move |&p| (t, a.s, p))).collect();
            let values = sweep(&k, &tasks)?;
            let samples = values
                .chunks(ps.len())
                .map(|c| (c[0].t, c.iter().map(|x| x.value).sum::<Complex64>().norm()))
                .collect();
            (samples, format!("t-log {spec} s={}", fmt_float(a.s)))
        }
    };
    let window = match &a.window {
        Some(w) => {
            let (lo, hi) =
                w.split_once(':').ok_or_else(|| CliError::config(format!("--window expects lo:hi, got {w:?}")))?;
            (number(lo)?, number(hi)?)
        }
        None => {
            let lo = samples.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
            let hi = samples.iter().map(|s| s.0).fold(f64::NEG_INFINITY, f64::max);
            // widen by one ulp-scale step so the endpoints are inside
            (lo * (1.0 - 1e-12), hi * (1.0 + 1e-12))
        }
    };
    let fit = decay_fit(&samples, window)?;
    let (target, pass) = match a.regime {
        Regime::Long => (-1.0, (fit.slope + 1.0).abs() <= a.tolerance),
        Regime::Short => {
            let bound = -(g.nf() - 1.0) / 2.0;
            (bound, fit.slope >= bound - a.tolerance)
        }
    };
    let regime = match a.regime {
        Regime::Long => "long",
        Regime::Short => "short",
    };
    let mut table =
        Table::new("decay", &["regime", "samples", "slope", "intercept", "rsquared", "target", "tolerance", "verdict"]);
    table.meta("n", g.n);
    table.meta("theta", theta_text(th));
    table.meta("grid", source);
    table.meta("window", format!("{}:{}", fmt_float(fit.window.0), fmt_float(fit.window.1)));
    let listed: Vec<String> = samples.iter().map(|(t, m)| format!("{}:{}", fmt_float(*t), fmt_float(*m))).collect();
    table.meta("samples", listed.join(" "));
    table.push(vec![
        regime.into(),
        samples.len().into(),
        fit.slope.into(),
        fit.intercept.into(),
        fit.rsquared.into(),
        target.into(),
        a.tolerance.into(),
        if pass { "pass" } else { "fail" }.into(),
    ]);
    Ok((table, if pass { 0 } else { EXIT_VERDICT }))
}

fn evolve(a: &EvolveArgs) -> Outcome<Table> {
    let g = geometry(a.n)?;
    let th = SmoothingOrder::new(a.theta, a.theta_im)?;
    let ts = values(&a.t, "--t")?;
    if a.partner && g.parity == Parity::Even {
        return Err(CliError::config("--partner needs odd n"));
    }
    let s_grid = uniform_grid(0.0, a.s_max, a.s_points);
    let r_grid = uniform_grid(0.0, a.r_max, a.r_points);
    let (f, label) = match &a.from_file {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
            let f = RadialProfile::from_text(&text)?;
            if f.geometry.n != g.n {
                return Err(CliError::config(format!("profile file is for n = {}, not {}", f.geometry.n, g.n)));
            }
            (f, format!("file {}", path.display()))
        }
        None => {
            let mut shape = ProfileShape::parse(&a.profile).ok_or_else(|| {
                CliError::config(format!("unknown profile {:?}; known: {}", a.profile, ProfileShape::NAMES.join(", ")))
            })?;
            if let ProfileShape::Gaussian { center, sharpness } = &mut shape {
                *center = a.center.unwrap_or(*center);
                *sharpness = a.sharpness.unwrap_or(*sharpness);
            } else if a.center.is_some() || a.sharpness.is_some() {
                return Err(CliError::config("--center and --sharpness apply to the gaussian profile"));
            }
            (shape.sample(g, s_grid)?, a.profile.clone())
        }
    };
    let tr = Transform::new(g, f.s_grid.clone(), r_grid)?;
    let h = tr.forward(&f)?;
    let frames: Vec<Outcome<(RadialProfile, Option<RadialProfile>)>> = ts
        .par_iter()
        .map(|&t| {
            let ht = evolve_half_wave(&h, t, th);
            let main = tr.inverse(&ht)?;
            let second = if g.parity == Parity::Odd { Some(tr.partner(&ht)?) } else { None };
            Ok((main, second))
        })
        .collect();

    let grid = format!(
        "s=0:{}:{} r=0:{}:{}",
        fmt_float(tr.s_grid().last().copied().unwrap_or(0.0)),
        tr.s_grid().len(),
        fmt_float(a.r_max),
        a.r_points
    );
    let mut table = if a.norms {
        Table::new("evolve", &["t", "l2", "sup"])
    } else if a.partner {
        Table::new("evolve", &["s", "value_re", "value_im", "partner_re", "partner_im"])
    } else {
        let mut t = Table::new("evolve", &["s", "value_re", "value_im"]);
        t.first_line = Some(format!("# hyperdirac-profile v1 n={} parity={}", g.n, g.parity.as_str()));
        t
    };
    table.meta("n", g.n);
    table.meta("theta", theta_text(th));
    table.meta("grid", grid);
    table.meta("profile", label);
    table.meta("n_fwd", fmt_float(tr.n_fwd()));
    table.blocks.clear();
    if a.norms {
        table.blocks.push(Block::default());
    }
    for (t, frame) in ts.iter().zip(frames) {
        let (main, second) = frame?;
        if a.norms {
            let mut l2 = norm_track(&main, 2.0)?.powi(2);
            let mut sup = norm_track(&main, f64::INFINITY)?;
            if let Some(p) = &second {
                l2 += norm_track(p, 2.0)?.powi(2);
                sup = sup.max(norm_track(p, f64::INFINITY)?);
            }
            table.push(vec![(*t).into(), l2.sqrt().into(), sup.into()]);
            continue;
        }
        let mut block = Block { label: Some(("t".into(), Cell::Float(*t))), rows: Vec::new() };
        for (i, (s, v)) in main.s_grid.iter().zip(&main.values).enumerate() {
            let mut row: Vec<Cell> = vec![(*s).into(), v.re.into(), v.im.into()];
            if a.partner {
                let p = second.as_ref().expect("odd n has a partner").values[i];
                row.push(p.re.into());
                row.push(p.im.into());
            }
            block.rows.push(row);
        }
        table.blocks.push(block);
    }
    Ok(table)
}

fn admissible(a: &AdmissibleArgs) -> Outcome<Table> {
    let g = geometry(a.n)?;
    if !(1..=1000).contains(&a.grid) {
        return Err(CliError::config("--grid must be in 1..=1000"));
    }
    let mut table = Table::new("admissible", &["inv_p", "inv_q", "triangle", "square", "theta"]);
    table.meta("n", g.n);
    table.meta("theta", "regularity exponent per row");
    table.meta("grid", format!("(j/{0}, k/{0}) for j, k = 0..={1}", 2 * a.grid, a.grid));
    for e in uniform_pair_grid(a.grid) {
        let theta = match regularity_exponent(&g, &e) {
            Ok(th) => th.to_string(),
            Err(Error::Inadmissible) => "NA".into(),
            Err(e) => return Err(e.into()),
        };
        table.push(vec![
            e.inv_p.to_string().into(),
            e.inv_q.to_string().into(),
            is_admissible_triangle(&g, &e).into(),
            is_admissible_square(&g, &e).into(),
            theta.into(),
        ]);
    }
    Ok(table)
}

fn specfun(a: &SpecfunArgs) -> Outcome<Table> {
    let g = geometry(a.n)?;
    let rs = values(&a.r, "--r")?;
    let ss = values(&a.s, "--s")?;
    let mut table;
    if a.mu {
        table = Table::new("specfun", &["r", "mu"]);
        for &r in &rs {
            table.push(vec![r.into(), plancherel_density(&g, r).into()]);
        }
    } else if a.c {
        table = Table::new("specfun", &["r", "c_re", "c_im", "c_simplified_re", "c_simplified_im"]);
        for &r in &rs {
            let raw = c_function_raw(&g, r)?;
            let simp = c_function_simplified(&g, r);
            table.push(vec![r.into(), raw.re.into(), raw.im.into(), simp.re.into(), simp.im.into()]);
        }
    } else if a.gamma2m {
        table = Table::new("specfun", &["r", "m", "gamma_re", "gamma_im", "limit"]);
        for &r in &rs {
            let c = hc_coefficients(&g, r, a.m);
            for (m, (v, (lim, _))) in c.values.iter().zip(&c.split).enumerate() {
                table.push(vec![r.into(), m.into(), v.re.into(), v.im.into(), (*lim).into()]);
            }
        }
    } else if a.phi {
        let odd = g.parity == Parity::Odd;
        let cols: &[&str] = if odd {
            &["r", "s", "even_re", "even_im", "tilde_re", "tilde_im"]
        } else {
            &["r", "s", "even_re", "even_im"]
        };
        table = Table::new("specfun", cols);
        let tasks: Vec<(f64, f64)> = rs.iter().flat_map(|&r| ss.iter().map(move |&s| (r, s))).collect();
        let rows: Vec<Outcome<Vec<Cell>>> = tasks
            .par_iter()
            .map(|&(r, s)| {
                let e = scalar_even(&g, r, s)?;
                let mut row: Vec<Cell> = vec![r.into(), s.into(), e.re.into(), e.im.into()];
                if odd {
                    let t = phi_tilde(&g, r, s)?;
                    row.push(t.re.into());
                    row.push(t.im.into());
                }
                Ok(row)
            })
            .collect();
        for row in rows {
            table.push(row?);
        }
    } else {
        table = Table::new("specfun", &["s", "phi0"]);
        for &s in &ss {
            table.push(vec![s.into(), ground_spherical(&g, s)?.into()]);
        }
    }
    table.meta("n", g.n);
    table.meta("theta", "n/a");
    table.meta("grid", format!("r={} s={} m={}", a.r, a.s, a.m));
    Ok(table)
}
