//! Nominal (noise-free, perfectly aligned) SPAM sets.
//!
//! The four shared preparations target ẑ, x̂, ŷ and −ẑ on the Bloch sphere;
//! method C adds a fifth along (1, 1, 1)/√3. The three shared measurement
//! directions are ẑ, x̂, ŷ; method C adds (1, 1, −1)/√3 and (1, −1, 1)/√3.

use qubit_core::{BlochVector, EvolutionParams};

use crate::error::Result;
use crate::types::{Method, MeasurementParams, SpamParameterSet, StateParams, ZMeasurementNoise};

/// Target Bloch vectors of the ideal preparations, in preparation order.
pub fn ideal_state_directions(method: Method) -> Vec<BlochVector> {
    let mut dirs = vec![
        BlochVector::Z,
        BlochVector::X,
        BlochVector::Y,
        BlochVector::Z.scaled(-1.0),
    ];
    if method == Method::C {
        let s = 1.0 / 3f64.sqrt();
        dirs.push(BlochVector::new(s, s, s));
    }
    dirs
}

/// Target directions of the ideal measurements, in measurement order.
pub fn ideal_measurement_directions(method: Method) -> Vec<BlochVector> {
    let mut dirs = vec![BlochVector::Z, BlochVector::X, BlochVector::Y];
    if method == Method::C {
        let s = 1.0 / 3f64.sqrt();
        dirs.push(BlochVector::new(s, s, -s));
        dirs.push(BlochVector::new(s, -s, s));
    }
    dirs
}

/// The ideal parameter set: pure states on their target axes, exact
/// measurement directions, zero readout noise. Method B must be given
/// evolution parameters, the static methods must not.
pub fn ideal_parameter_set(
    method: Method,
    evolution: Option<EvolutionParams>,
) -> Result<SpamParameterSet> {
    let states = ideal_state_directions(method)
        .iter()
        .enumerate()
        .map(|(k, r)| match k {
            0 => StateParams::FixedPlusZ,
            1 => StateParams::PlanarX { rx: r.x, rz: r.z },
            _ => StateParams::General { rx: r.x, ry: r.y, rz: r.z },
        })
        .collect();
    let measurements = ideal_measurement_directions(method)
        .iter()
        .enumerate()
        .map(|(k, r)| {
            if k == 0 {
                MeasurementParams::FixedPlusZ
            } else {
                MeasurementParams::General { rx: r.x, ry: r.y, rz: r.z }
            }
        })
        .collect();
    SpamParameterSet::new(method, states, measurements, ZMeasurementNoise::ideal(), evolution)
}
