//! Estimate-versus-truth comparison metrics.

use qubit_core::state_fidelity;
use serde::{Deserialize, Serialize};
use spam_model::{realize, SpamParameterSet};

use crate::error::{Error, Result};

/// Pointwise comparison of a reconstructed SPAM set with the truth it was
/// sampled from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReconstructionReport {
    /// Uhlmann fidelity of each reconstructed state against truth.
    pub state_fidelities: Vec<f64>,
    /// Angular separation of each measurement direction from truth, in
    /// degrees; the fixed reference measurement contributes 0.
    pub measurement_angles_deg: Vec<f64>,
    /// Signed readout-error misestimates, estimate − truth.
    pub eps0_error: f64,
    pub eps1_error: f64,
    /// Relative rate and decay misestimates when both sets evolve.
    pub omega_rel_error: Option<f64>,
    pub t2_rel_error: Option<f64>,
}

/// Compares two same-shape parameter sets state by state and measurement
/// by measurement.
pub fn reconstruction_report(
    estimate: &SpamParameterSet,
    truth: &SpamParameterSet,
) -> Result<ReconstructionReport> {
    if estimate.states().len() != truth.states().len()
        || estimate.measurements().len() != truth.measurements().len()
    {
        return Err(Error::ShapeMismatch {
            detail: format!(
                "estimate is {}x{}, truth is {}x{}",
                estimate.states().len(),
                estimate.measurements().len(),
                truth.states().len(),
                truth.measurements().len()
            ),
        });
    }
    let (est_states, _) = realize(estimate)?;
    let (true_states, _) = realize(truth)?;
    let state_fidelities = est_states
        .iter()
        .zip(&true_states)
        .map(|(a, b)| state_fidelity(a, b))
        .collect();
    let measurement_angles_deg = estimate
        .measurements()
        .iter()
        .zip(truth.measurements())
        .map(|(a, b)| {
            let (da, db) = (a.direction(), b.direction());
            if da.norm() < 1e-12 || db.norm() < 1e-12 {
                f64::NAN
            } else {
                da.angle_to(&db).to_degrees()
            }
        })
        .collect();
    let (omega_rel_error, t2_rel_error) = match (estimate.evolution(), truth.evolution()) {
        (Some(e), Some(t)) => (
            Some((e.omega_rot() - t.omega_rot()) / t.omega_rot()),
            Some((e.t2() - t.t2()) / t.t2()),
        ),
        _ => (None, None),
    };
    Ok(ReconstructionReport {
        state_fidelities,
        measurement_angles_deg,
        eps0_error: estimate.noise().eps0 - truth.noise().eps0,
        eps1_error: estimate.noise().eps1 - truth.noise().eps1,
        omega_rel_error,
        t2_rel_error,
    })
}
