use nalgebra::{Matrix2, Vector2};

use crate::bloch::BlochVector;
use crate::effect::Effect;
use crate::error::{Error, Result};
use crate::linalg;
use crate::pauli::{c, C64};

const TOL: f64 = 1e-12;

/// Qubit density matrix: Hermitian, unit trace, PSD (within 1e-12).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    m: Matrix2<C64>,
}

impl DensityMatrix {
    pub fn new(m: Matrix2<C64>) -> Result<Self> {
        let herm = linalg::hermiticity_deviation2(&m);
        if herm > TOL {
            return Err(Error::NotHermitian { deviation: herm });
        }
        let tr = m.trace();
        let tr_dev = (tr - c(1.0, 0.0)).norm();
        if tr_dev > TOL {
            return Err(Error::TraceNotOne { deviation: tr_dev });
        }
        let lo = linalg::eigenvalues2(&linalg::hermitize2(&m))[0];
        if lo < -TOL {
            return Err(Error::NegativeEigenvalue { value: lo });
        }
        Ok(DensityMatrix { m: linalg::hermitize2(&m) })
    }

    /// Accepts small numerical drift (as from an integrator): symmetrizes,
    /// clamps negative eigenvalues to 0 and rescales to unit trace.
    pub(crate) fn from_matrix_clamped(m: &Matrix2<C64>) -> Self {
        let lo = linalg::eigenvalues2(&linalg::hermitize2(m))[0];
        let tr = m.trace();
        if lo < 0.0 || (tr - c(1.0, 0.0)).norm() > 0.5 * TOL {
            DensityMatrix { m: linalg::psd_clamp2(m, true) }
        } else {
            DensityMatrix { m: linalg::hermitize2(m) }
        }
    }

    /// ρ = ½(I + r·σ); errors if ‖r‖ > 1 + 1e-12.
    pub fn from_bloch(r: &BlochVector) -> Result<Self> {
        let n = r.norm();
        if n > 1.0 + TOL {
            return Err(Error::BlochNormTooLarge { norm: n });
        }
        // Direct entries of ½(I + xσ_x + yσ_y + zσ_z); clamp hides only the
        // ≤1e-12 overshoot admitted above.
        let r = if n > 1.0 { r.scaled(1.0 / n) } else { *r };
        let m = Matrix2::new(
            c(0.5 * (1.0 + r.z), 0.0),
            c(0.5 * r.x, -0.5 * r.y),
            c(0.5 * r.x, 0.5 * r.y),
            c(0.5 * (1.0 - r.z), 0.0),
        );
        Ok(DensityMatrix { m })
    }

    /// Pure state |ψ⟩⟨ψ| from a normalized ket.
    pub fn from_ket(ket: &Vector2<C64>) -> Result<Self> {
        DensityMatrix::new(ket * ket.adjoint())
    }

    /// |0⟩⟨0|, the +z pole.
    pub fn plus_z() -> Self {
        DensityMatrix::from_bloch(&BlochVector::Z).unwrap()
    }

    /// |1⟩⟨1|.
    pub fn minus_z() -> Self {
        DensityMatrix::from_bloch(&BlochVector::Z.scaled(-1.0)).unwrap()
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix::from_bloch(&BlochVector::new(0.0, 0.0, 0.0)).unwrap()
    }

    pub fn matrix(&self) -> &Matrix2<C64> {
        &self.m
    }

    /// Bloch components r_a = Tr(σ_a ρ).
    pub fn bloch(&self) -> BlochVector {
        BlochVector::new(
            2.0 * self.m[(1, 0)].re,
            2.0 * self.m[(1, 0)].im,
            (self.m[(0, 0)] - self.m[(1, 1)]).re,
        )
    }

    pub fn purity(&self) -> f64 {
        (self.m * self.m).trace().re
    }
}

/// Born rule Tr(Eρ), clamped into [0, 1] only against ≤1e-12 rounding
/// overshoot.
pub fn born_probability(rho: &DensityMatrix, e: &Effect) -> f64 {
    let p = (e.matrix() * rho.matrix()).trace().re;
    if (-TOL..0.0).contains(&p) {
        0.0
    } else if (1.0..=1.0 + TOL).contains(&p) {
        1.0
    } else {
        p
    }
}

/// Uhlmann fidelity F = (Tr √(√ρ σ √ρ))² between two states.
pub fn state_fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    linalg::fidelity2(rho.matrix(), sigma.matrix())
}
