//! Deterministic local minimizers used by the fitting layers: a damped
//! least-squares (Levenberg-Marquardt) solver with forward-difference
//! Jacobians, a Nelder-Mead simplex fallback for scalar objectives, and the
//! finite-difference helpers they share. No randomness anywhere; identical
//! inputs give identical iterates.

pub mod diff;
pub mod least_squares;
pub mod simplex;

pub use diff::{central_gradient, forward_jacobian};
pub use least_squares::{levenberg_marquardt, LmConfig, LmResult};
pub use simplex::{nelder_mead, NmConfig, NmResult};
