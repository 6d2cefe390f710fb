use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Gamma pole at nonpositive integer {0}")]
    Pole(i64),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series did not converge within {0} terms")]
    SeriesCap(usize),
    #[error("quadrature did not converge: estimated error {est_error:.3e} for |value| = {magnitude:.3e}")]
    NonConvergence { est_error: f64, magnitude: f64 },
    #[error("divergent integral: {0}")]
    Divergence(String),
    #[error("profile undersampled: grid step {step:.4e} exceeds {limit:.4e}")]
    Undersampled { step: f64, limit: f64 },
    #[error("spectral tail not negligible: relative tail {0:.3e}")]
    Truncation(f64),
    #[error("parity mismatch: {0}")]
    Parity(String),
    #[error("need at least {need} samples inside the window, got {got}")]
    InsufficientSamples { need: usize, got: usize },
    #[error("nonpositive magnitude {0} cannot be fitted in log-log coordinates")]
    NonPositive(f64),
    #[error("exponent pair is not admissible")]
    Inadmissible,
}

impl Error {
    /// True for failures of a numerical method, false for rejected inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::SeriesCap(_) | Error::NonConvergence { .. } | Error::Divergence(_) | Error::Truncation(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
