//! Linear inversion of process data.
//!
//! Each cell probability is linear in the transfer matrix,
//!
//!   p_{j|i} = w_j · (R v_i),   v_i = (1, r_i),   w_j = (e₀_j, e_j),
//!
//! with r_i the Bloch vector of prepared state i and (e₀_j, e_j) the
//! components of effect j. With the top row of R pinned, the 12 remaining
//! entries solve an ordinary least-squares system; a rank check on the
//! design matrix rejects SPAM sets that do not probe all 12 directions.

use nalgebra::{DMatrix, DVector};
use qubit_core::{ChoiState, DensityMatrix, Effect};

use crate::error::{Error, Result};
use crate::ptm::PauliTransferMatrix;

/// Relative singular-value threshold below which a design direction counts
/// as unprobed. Informationally complete sets sit many orders above it,
/// degenerate ones many orders below.
const RANK_TOL: f64 = 1e-9;

/// Least-squares estimate of the process generating the observed
/// frequencies, as a (possibly non-positive) Choi state.
///
/// `frequencies` holds one entry per (state i, effect j) cell in row-major
/// order, frequencies[i * effects.len() + j].
pub fn linear_invert(
    frequencies: &[f64],
    states: &[DensityMatrix],
    effects: &[Effect],
) -> Result<ChoiState> {
    let cells = states.len() * effects.len();
    if frequencies.len() != cells {
        return Err(Error::ShapeMismatch {
            detail: format!(
                "{} states × {} effects need {cells} frequencies, got {}",
                states.len(),
                effects.len(),
                frequencies.len()
            ),
        });
    }
    if let Some(bad) = frequencies.iter().find(|f| !f.is_finite()) {
        return Err(Error::ShapeMismatch { detail: format!("non-finite frequency {bad}") });
    }
    if cells < 12 {
        return Err(Error::TooFewCells { cells });
    }

    let mut design = DMatrix::zeros(cells, 12);
    let mut rhs = DVector::zeros(cells);
    for (i, rho) in states.iter().enumerate() {
        let r = rho.bloch();
        let v = [1.0, r.x, r.y, r.z];
        for (j, effect) in effects.iter().enumerate() {
            let e = effect.vector();
            let w = [effect.e0(), e.x, e.y, e.z];
            let row = i * effects.len() + j;
            for a in 1..4 {
                for b in 0..4 {
                    design[(row, 4 * (a - 1) + b)] = w[a] * v[b];
                }
            }
            // the pinned top row contributes w₀·1 to every cell
            rhs[row] = frequencies[row] - w[0];
        }
    }

    let svd = design.svd(true, true);
    let sv_max = svd.singular_values.max();
    let threshold = RANK_TOL * sv_max.max(f64::MIN_POSITIVE);
    let rank = svd.singular_values.iter().filter(|s| **s > threshold).count();
    if rank < 12 {
        return Err(Error::NotInformationallyComplete { rank });
    }
    let x = svd.solve(&rhs, threshold).expect("both singular bases were computed");
    let mut free = [0.0; 12];
    free.copy_from_slice(x.as_slice());
    Ok(PauliTransferMatrix::from_free(&free).to_choi())
}
