//! Spherical analysis on real hyperbolic space `H^n` for spinor-valued radial
//! functions, and numerics for the smoothed Dirac propagator.

pub mod error;
pub mod evolve;
pub mod propagator;
pub mod specfun;
pub mod spectral;
pub mod spherical;
pub mod strichartz;

pub use error::{Error, Result};
pub use spectral::{Geometry, Parity};
