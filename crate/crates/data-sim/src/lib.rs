//! Ground-truth generation and finite-shot data simulation.
//!
//! Builds SPAM sets whose directions and norms deviate from the ideal axes
//! by configurable systematic (~degrees) and stochastic (~norm/readout)
//! error scales, then samples exact binomial count datasets from them for
//! static tables, free-evolution timeseries and gate tomography.
//!
//! All randomness flows through explicit 64-bit seeds; see [`seeds`] for
//! the derivation scheme that keeps parallel runs independent.

mod dataset;
mod error;
mod grid;
mod sample;
pub mod seeds;
mod truth;

pub use dataset::{CountDataset, DatasetLayout};
pub use error::{Error, Result};
pub use grid::{default_time_grid, time_grid, DEFAULT_TIME_POINTS};
pub use sample::{sample_process, sample_static, sample_timeseries};
pub use truth::{make_ground_truth, GroundTruthConfig};
