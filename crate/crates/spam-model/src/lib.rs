//! Parametric models of state preparation and measurement (SPAM) sets.
//!
//! A SPAM set pairs a list of prepared single-qubit states with a list of
//! two-outcome measurements that share readout error rates (ε₀, ε₁). Three
//! model variants are provided: a 12-parameter constrained static model, an
//! 18-parameter model identified through free evolution, and a 25-parameter
//! unconstrained static model with an enlarged set.
//!
//! The crate separates three concerns: structured parameter types with flat
//! pack/unpack layouts for optimizers, smooth closed-form probability
//! predictions valid slightly outside the physical region, and a strict
//! `realize` step that converts parameters into validated operators. A
//! `gauge` module captures the exact in-plane reparametrization family under
//! which predictions are invariant, which bounds what any fit can identify.

mod error;
mod gauge;
mod ideal;
mod pack;
mod predict;
mod project;
mod realize;
mod types;

pub use error::{Error, Result};
pub use gauge::GaugeTransform;
pub use ideal::{ideal_measurement_directions, ideal_parameter_set, ideal_state_directions};
pub use pack::{pack, unpack};
pub use predict::{predict_static, predict_timeseries, probability_table};
pub use project::project_physical;
pub use realize::{effect_from_direction, realize};
pub use types::{
    MeasurementParams, Method, SpamParameterSet, StateParams, ZMeasurementNoise,
};
