//! Projection of a parameter set onto the physical region.
//!
//! Fits run unconstrained, so the returned point may carry Bloch norms a
//! shade above 1 or noise just outside [0, 0.5). This maps such a point to
//! the nearest physical one: over-long vectors are rescaled onto the unit
//! sphere (direction kept), noise is clamped into [0, 0.5). Points already
//! physical pass through unchanged, so the map is idempotent.

use crate::types::{MeasurementParams, SpamParameterSet, StateParams, ZMeasurementNoise};

/// Largest admitted noise value; 0.5 itself would make a measurement
/// uninformative, so the clamp stays strictly below it.
const NOISE_MAX: f64 = 0.5 - 1e-12;

/// Rescaling x/‖x‖ can itself land a few ULP above 1, so projecting only
/// overshoots beyond this slack keeps the map exactly idempotent. The
/// residual overshoot is far inside the tolerance `realize` accepts.
const PROJ_TOL: f64 = 1e-14;

/// Returns the closest physically realizable set: Bloch norms capped at 1,
/// readout noise clamped into [0, 0.5). Structure and method are preserved.
pub fn project_physical(params: &SpamParameterSet) -> SpamParameterSet {
    let states = params.states().iter().map(project_state).collect();
    let measurements = params.measurements().iter().map(project_measurement).collect();
    let noise = ZMeasurementNoise {
        eps0: params.noise().eps0.clamp(0.0, NOISE_MAX),
        eps1: params.noise().eps1.clamp(0.0, NOISE_MAX),
    };
    SpamParameterSet::new(
        params.method(),
        states,
        measurements,
        noise,
        params.evolution().copied(),
    )
    .expect("projection preserves structural validity")
}

fn project_state(s: &StateParams) -> StateParams {
    match *s {
        StateParams::FixedPlusZ => StateParams::FixedPlusZ,
        StateParams::PlanarX { rx, rz } => {
            let norm = (rx * rx + rz * rz).sqrt();
            if norm > 1.0 + PROJ_TOL {
                StateParams::PlanarX { rx: rx / norm, rz: rz / norm }
            } else {
                StateParams::PlanarX { rx, rz }
            }
        }
        StateParams::General { rx, ry, rz } => {
            let norm = (rx * rx + ry * ry + rz * rz).sqrt();
            if norm > 1.0 + PROJ_TOL {
                StateParams::General { rx: rx / norm, ry: ry / norm, rz: rz / norm }
            } else {
                StateParams::General { rx, ry, rz }
            }
        }
    }
}

fn project_measurement(m: &MeasurementParams) -> MeasurementParams {
    match *m {
        MeasurementParams::FixedPlusZ => MeasurementParams::FixedPlusZ,
        MeasurementParams::General { rx, ry, rz } => {
            let norm = (rx * rx + ry * ry + rz * rz).sqrt();
            if norm > 1.0 + PROJ_TOL {
                MeasurementParams::General { rx: rx / norm, ry: ry / norm, rz: rz / norm }
            } else {
                MeasurementParams::General { rx, ry, rz }
            }
        }
    }
}
