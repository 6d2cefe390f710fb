//! `hyperdirac`: tables for the special functions, propagator kernel,
//! radial evolution and exponent calculus.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hyperdirac", version, about = "Smoothed Dirac propagator numerics on hyperbolic space")]
pub struct Cli {
    /// Worker threads for grid sweeps (default: all cores).
    #[arg(long, global = true, env = "HYPERDIRAC_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the table here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kernel pieces K_t(s) on a (t, s) grid.
    Kernel(KernelArgs),
    /// Log-log decay fit of kernel magnitudes with a pass/fail verdict.
    Decay(DecayArgs),
    /// Radial half-wave evolution of a profile.
    Evolve(EvolveArgs),
    /// Admissibility table over a rational grid of (1/p, 1/q).
    Admissible(AdmissibleArgs),
    /// Special-function tables.
    Specfun(SpecfunArgs),
}

#[derive(Debug, Args)]
pub struct Smoothing {
    /// Real part of theta (default: (n+1)/2).
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta_im: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("times").required(true).args(["t", "t_log"])))]
pub struct KernelArgs {
    #[arg(long)]
    pub n: u32,
    #[command(flatten)]
    pub smoothing: Smoothing,
    /// Geodesic radii, comma separated or a:b:k.
    #[arg(long, default_value = "1")]
    pub s: String,
    /// Times, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// k log-spaced times from a to b, as a:b:k.
    #[arg(long)]
    pub t_log: Option<String>,
    /// split (the three pieces), all (pieces and total) or one piece name.
    #[arg(long, default_value = "split")]
    pub piece: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Regime {
    /// |K_{t,0}| over large t, target slope -1.
    Long,
    /// |K_{t,inf}| over small t, slope bounded below by -(n-1)/2.
    Short,
}

#[derive(Debug, Args)]
pub struct DecayArgs {
    #[arg(long, default_value_t = 3)]
    pub n: u32,
    #[command(flatten)]
    pub smoothing: Smoothing,
    #[arg(long, default_value_t = 1.0)]
    pub s: f64,
    #[arg(long, value_enum, default_value_t = Regime::Long)]
    pub regime: Regime,
    /// Times a:b:k (default 8:128:33 long, 1/64:1/4:17 short).
    #[arg(long)]
    pub t_log: Option<String>,
    /// Fit window lo:hi (default: the sampled range).
    #[arg(long)]
    pub window: Option<String>,
    /// Read (t, magnitude) samples from a CSV file instead of computing them.
    #[arg(long)]
    pub from_file: Option<PathBuf>,
    #[arg(long, default_value_t = 0.15)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long)]
    pub n: u32,
    /// gaussian, narrow, oscillatory, chirp, twobump, modulated or balanced.
    #[arg(long, default_value = "gaussian")]
    pub profile: String,
    #[arg(long)]
    pub center: Option<f64>,
    #[arg(long)]
    pub sharpness: Option<f64>,
    /// Initial profile in the columnar profile format.
    #[arg(long)]
    pub from_file: Option<PathBuf>,
    /// Times, comma separated.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub t: String,
    /// Smoothing exponent applied with the flow (default 0).
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta_im: f64,
    #[arg(long, default_value_t = 20.0)]
    pub s_max: f64,
    #[arg(long, default_value_t = 2048)]
    pub s_points: usize,
    #[arg(long, default_value_t = 40.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 4096)]
    pub r_points: usize,
    /// Emit the L2 and sup norms per time instead of profiles.
    #[arg(long)]
    pub norms: bool,
    /// Odd n: emit the second spinor component as well.
    #[arg(long)]
    pub partner: bool,
}

#[derive(Debug, Args)]
pub struct AdmissibleArgs {
    #[arg(long)]
    pub n: u32,
    /// m: the grid is (j/(2m), k/(2m)), j, k = 0..=m.
    #[arg(long, default_value_t = 8)]
    pub grid: i64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("table").required(true).args(["mu", "c", "gamma2m", "phi", "ground"])))]
pub struct SpecfunArgs {
    #[arg(long)]
    pub n: u32,
    /// Plancherel density mu(r).
    #[arg(long)]
    pub mu: bool,
    /// c-function c(2r), raw and simplified.
    #[arg(long)]
    pub c: bool,
    /// Expansion coefficients Gamma_{2m}(r), m = 0..=M.
    #[arg(long)]
    pub gamma2m: bool,
    /// Scalar spherical components at (r, s).
    #[arg(long)]
    pub phi: bool,
    /// Ground spherical function phi_0(s).
    #[arg(long)]
    pub ground: bool,
    /// Spectral points, comma separated or a:b:k.
    #[arg(long, default_value = "1")]
    pub r: String,
    /// Radii, comma separated or a:b:k.
    #[arg(long, default_value = "1")]
    pub s: String,
    /// Highest coefficient index for --gamma2m.
    #[arg(long, default_value_t = 10)]
    pub m: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(commands::EXIT_CONFIG),
            };
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
