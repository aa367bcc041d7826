//! Quantum-process reconstruction from count data taken with a known (or
//! separately fitted) SPAM set.
//!
//! The pipeline has two stages. `linear_invert` solves the linear system
//! p_{j|i} = Tr(E_j 𝓔(ρ_i)) for the free entries of a Pauli transfer matrix
//! and converts it to a Choi state; the result is Hermitian, unit-trace and
//! trace-preserving by construction but not necessarily positive.
//! `mle_project` then minimizes the weighted component mismatch
//!
//!   −ln𝓛 = N Σ_k (p_k − q_k)² / max(|q_k(1 − q_k)|, 10⁻³)
//!
//! over a Cholesky parametrization ρ = T†T/Tr(T†T), which is positive and
//! unit-trace for every parameter value, while an augmented Lagrangian
//! outer loop drives the four trace-preservation components Tr_B ρ − I/2
//! toward zero, reporting the residual it achieves. A noisy-Hadamard
//! reference map and a clamped Choi-state fidelity round out the toolkit.

mod cholesky;
mod error;
mod fidelity;
mod invert;
mod mle;
mod ptm;
mod truth;

pub use cholesky::CholeskyParams;
pub use error::{Error, Result};
pub use fidelity::process_fidelity;
pub use invert::linear_invert;
pub use mle::{
    constraints, mle_project, process_nll, AugLagState, ProcessFit, ProjectionBudget,
};
pub use ptm::PauliTransferMatrix;
pub use truth::{hadamard_truth, ideal_hadamard};
