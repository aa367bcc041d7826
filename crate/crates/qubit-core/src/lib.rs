//! Exact single-qubit calculus for tomography work: density matrices and
//! POVM effects with validated invariants, the Born rule, analytic and
//! numeric dephasing-rotation evolution, Uhlmann fidelities, and Choi-state
//! machinery for process representations.
//!
//! All types are immutable values and all operations are pure functions, so
//! everything here is safe to use from any number of threads.

pub mod bloch;
pub mod choi;
pub mod effect;
pub mod error;
pub mod evolve;
pub mod linalg;
pub mod pauli;
pub mod state;

pub use bloch::BlochVector;
pub use choi::{apply_choi, choi_from_unitary, partial_trace_b, ChoiState};
pub use effect::Effect;
pub use error::{Error, Result};
pub use evolve::{
    default_step_count, evolve_state, lindblad_choi, lindblad_integrate,
    lindblad_integrate_steps, EvolutionParams,
};
pub use pauli::{pauli_expansion, pauli_reconstruction, C64};
pub use state::{born_probability, state_fidelity, DensityMatrix};
