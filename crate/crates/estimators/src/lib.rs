//! Maximum-likelihood SPAM reconstruction from count data.
//!
//! The objective is a weighted least-squares form over observed outcome
//! frequencies; fitting runs a multi-start damped least-squares descent on
//! the packed parameter vector, projects the winner onto the physical set,
//! and reports comparison metrics against a known truth. Where the model is
//! identified only up to an invariance family, `gauge_align` moves an
//! estimate to the family member nearest a reference so that comparisons
//! measure data-visible error alone.

mod align;
mod error;
mod fit;
mod init;
mod objective;
mod report;

pub use align::gauge_align;
pub use error::{Error, Result};
pub use fit::{fit, FitResult, OptimizerBudget};
pub use init::{initial_points, InitStrategy};
pub use objective::{nll, nll_static, nll_timeseries, WeightConvention};
pub use report::{reconstruction_report, ReconstructionReport};
