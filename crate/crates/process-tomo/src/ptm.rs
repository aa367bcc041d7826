//! Pauli transfer matrix: the real 4×4 representation R of a qubit map in
//! the (I, σ_x, σ_y, σ_z) basis,
//!
//!   R[a][b] = ½ Tr(M_a 𝓔(M_b)),
//!
//! acting on Pauli coefficient vectors (1, r_x, r_y, r_z). The top row is
//! pinned to (1, 0, 0, 0), which encodes trace preservation; the remaining
//! 12 entries are the free unknowns of linear inversion. Conversion to and
//! from Choi states uses R[a][b] = Tr[(M_bᵀ ⊗ M_a) ρ_𝓔], where transposing
//! the input-leg Pauli only flips the sign of σ_y.

use nalgebra::Matrix4;
use qubit_core::{pauli_expansion, pauli_reconstruction, ChoiState};

use crate::error::{Error, Result};

/// Largest top-row deviation accepted before a matrix is rejected; smaller
/// drift is snapped onto the exact (1, 0, 0, 0) row.
const ROW_TOL: f64 = 1e-9;

/// Sign picked up by M_b under transposition: −1 for σ_y, +1 otherwise.
fn transpose_sign(b: usize) -> f64 {
    if b == 2 {
        -1.0
    } else {
        1.0
    }
}

/// Trace-preserving Pauli transfer matrix with the top row fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliTransferMatrix {
    m: Matrix4<f64>,
}

impl PauliTransferMatrix {
    /// Validates the top row against (1, 0, 0, 0) within 1e-9 and snaps it
    /// exact.
    pub fn new(m: Matrix4<f64>) -> Result<Self> {
        let deviation = (m[(0, 0)] - 1.0)
            .abs()
            .max(m[(0, 1)].abs())
            .max(m[(0, 2)].abs())
            .max(m[(0, 3)].abs());
        if !deviation.is_finite() || deviation > ROW_TOL {
            return Err(Error::FixedRowViolated { deviation });
        }
        let mut m = m;
        m[(0, 0)] = 1.0;
        for b in 1..4 {
            m[(0, b)] = 0.0;
        }
        Ok(PauliTransferMatrix { m })
    }

    /// Builds from the 12 free entries, rows 1..3 in row-major order.
    pub fn from_free(free: &[f64; 12]) -> Self {
        let mut m = Matrix4::zeros();
        m[(0, 0)] = 1.0;
        for a in 1..4 {
            for b in 0..4 {
                m[(a, b)] = free[4 * (a - 1) + b];
            }
        }
        PauliTransferMatrix { m }
    }

    /// Transfer matrix of the map a Choi state encodes; fails when the
    /// state is not trace preserving within 1e-9.
    pub fn from_choi(choi: &ChoiState) -> Result<Self> {
        let p = pauli_expansion(choi.matrix());
        let mut m = Matrix4::zeros();
        for a in 0..4 {
            for b in 0..4 {
                m[(a, b)] = transpose_sign(b) * p[4 * b + a];
            }
        }
        PauliTransferMatrix::new(m)
    }

    /// Choi state of the encoded map, ρ_𝓔 = ¼ Σ R[a][b] (M_bᵀ ⊗ M_a).
    pub fn to_choi(&self) -> ChoiState {
        let mut p = [0.0; 16];
        for a in 0..4 {
            for b in 0..4 {
                p[4 * b + a] = transpose_sign(b) * self.m[(a, b)];
            }
        }
        ChoiState::new(pauli_reconstruction(&p))
            .expect("real coefficients with a unit top-left entry give a Hermitian unit-trace matrix")
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }
}
