//! Uhlmann fidelity between Choi states, F = (Tr √(√a b √a))².
//!
//! Reconstructed arguments may carry small negative eigenvalues from
//! inversion noise; both inputs are positive-clamped and renormalized
//! before the fidelity is taken, which leaves physical states untouched.

use qubit_core::{linalg, ChoiState};

/// Fidelity between two process Choi states, in [0, 1] and symmetric.
pub fn process_fidelity(a: &ChoiState, b: &ChoiState) -> f64 {
    let ca = linalg::psd_clamp4(a.matrix(), true);
    let cb = linalg::psd_clamp4(b.matrix(), true);
    linalg::fidelity4(&ca, &cb)
}
