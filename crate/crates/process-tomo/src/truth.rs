//! The noisy-Hadamard reference map: a π rotation about the diagonal axis
//! n = (x̂ + ẑ)/√2 lasting t = π/Ω, dephased along the same axis at rate
//! 1/(2T₂). As T₂ → ∞ the map converges to conjugation by the Hadamard
//! unitary H = (σ_x + σ_z)/√2.

use nalgebra::Matrix2;
use qubit_core::pauli::c;
use qubit_core::{choi_from_unitary, lindblad_choi, BlochVector, ChoiState, EvolutionParams};

use crate::error::{Error, Result};

/// Choi state of the dephased Hadamard implementation for the given
/// rotation rate and decay time.
pub fn hadamard_truth(ev: &EvolutionParams) -> Result<ChoiState> {
    if ev.omega_rot() <= 0.0 {
        return Err(Error::ZeroRotation);
    }
    let axis = BlochVector::new(std::f64::consts::FRAC_1_SQRT_2, 0.0, std::f64::consts::FRAC_1_SQRT_2);
    let duration = std::f64::consts::PI / ev.omega_rot();
    Ok(lindblad_choi(duration, &axis, ev)?)
}

/// Choi state of the exact Hadamard unitary.
pub fn ideal_hadamard() -> ChoiState {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let h = Matrix2::new(c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0));
    choi_from_unitary(&h).expect("the Hadamard matrix is unitary")
}
