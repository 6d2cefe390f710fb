//! Gamma, Gauss hypergeometric and Jacobi functions.

mod gamma;
mod hyp;
mod jacobi;
pub(crate) mod ode;

pub use gamma::{gamma, ln_gamma_real, log_gamma};
pub use hyp::{hyp2f1, hyp2f1_capped, CompensatedSum, DEFAULT_TERM_CAP};
pub use jacobi::{c_jacobi, jacobi_phi, jacobi_phi_grid, jacobi_phi_real, HcSeries, JacobiParams, HC_MAX_TERMS};
