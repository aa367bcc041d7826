//! Mapping parameter sets to operators.
//!
//! A state entry with Bloch vector r becomes ρ = ½(I + r·σ). A measurement
//! direction R together with the shared noise (ε₀, ε₁) becomes the effect
//!
//!   E = (1 − ε₀) P₊(R) + ε₁ P₋(R)
//!     = e₀ I + e·σ,  e₀ = ½(1 + ε₁ − ε₀),  e = ½(1 − ε₀ − ε₁) R,
//!
//! so that measuring |0⟩⟨0| along ẑ yields 1 − ε₀ and |1⟩⟨1| yields ε₁.

use qubit_core::{DensityMatrix, Effect};

use crate::error::{Error, Result};
use crate::types::{SpamParameterSet, ZMeasurementNoise};

/// Slack accepted on ‖r‖ ≤ 1 before an operator is rejected; overshoot
/// within it is rescaled onto the unit sphere.
const NORM_TOL: f64 = 1e-9;

fn onto_ball(r: &qubit_core::BlochVector) -> qubit_core::BlochVector {
    let n = r.norm();
    if n > 1.0 { r.scaled(1.0 / n) } else { *r }
}

/// Builds the density matrices and effects a parameter set describes.
///
/// Unlike prediction, which stays smooth slightly outside the physical set,
/// this errors whenever a Bloch norm exceeds 1 or the readout noise leaves
/// [0, 0.5), so callers get operators that are guaranteed physical.
pub fn realize(params: &SpamParameterSet) -> Result<(Vec<DensityMatrix>, Vec<Effect>)> {
    params.noise().check_physical()?;
    let mut states = Vec::with_capacity(params.states().len());
    for (k, s) in params.states().iter().enumerate() {
        let r = s.bloch();
        if r.norm() > 1.0 + NORM_TOL {
            return Err(Error::NormBound { what: format!("state {k}"), norm: r.norm() });
        }
        states.push(DensityMatrix::from_bloch(&onto_ball(&r))?);
    }
    let mut effects = Vec::with_capacity(params.measurements().len());
    for (k, m) in params.measurements().iter().enumerate() {
        let dir = m.direction();
        if dir.norm() > 1.0 + NORM_TOL {
            return Err(Error::NormBound { what: format!("measurement {k}"), norm: dir.norm() });
        }
        effects.push(effect_from_direction(params.noise(), &onto_ball(&dir))?);
    }
    Ok((states, effects))
}

/// Effect for a single measurement direction under shared readout noise.
pub fn effect_from_direction(
    noise: &ZMeasurementNoise,
    direction: &qubit_core::BlochVector,
) -> Result<Effect> {
    let e0 = 0.5 * (1.0 + noise.eps1 - noise.eps0);
    let scale = 0.5 * (1.0 - noise.eps0 - noise.eps1);
    Ok(Effect::from_components(e0, &direction.scaled(scale))?)
}
