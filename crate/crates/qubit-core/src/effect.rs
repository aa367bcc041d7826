use nalgebra::Matrix2;

use crate::bloch::BlochVector;
use crate::error::{Error, Result};
use crate::linalg;
use crate::pauli::{c, C64};

const TOL: f64 = 1e-12;

/// POVM effect: Hermitian with spectrum in [0, 1] (within 1e-12).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Effect {
    m: Matrix2<C64>,
}

impl Effect {
    pub fn new(m: Matrix2<C64>) -> Result<Self> {
        let herm = linalg::hermiticity_deviation2(&m);
        if herm > TOL {
            return Err(Error::NotHermitian { deviation: herm });
        }
        let m = linalg::hermitize2(&m);
        let [lo, hi] = linalg::eigenvalues2(&m);
        if lo < -TOL || hi > 1.0 + TOL {
            let value = if lo < -TOL { lo } else { hi };
            return Err(Error::EffectOutOfRange { value });
        }
        Ok(Effect { m })
    }

    /// E = e₀ I + e·σ. Physicality (0 ≤ E ≤ I) is still validated.
    pub fn from_components(e0: f64, e: &BlochVector) -> Result<Self> {
        let m = Matrix2::new(
            c(e0 + e.z, 0.0),
            c(e.x, -e.y),
            c(e.x, e.y),
            c(e0 - e.z, 0.0),
        );
        Effect::new(m)
    }

    pub fn matrix(&self) -> &Matrix2<C64> {
        &self.m
    }

    /// Trace component e₀ = Tr(E)/2.
    pub fn e0(&self) -> f64 {
        0.5 * self.m.trace().re
    }

    /// Vector components e_a = Tr(σ_a E)/2, so that E = e₀I + e·σ.
    pub fn vector(&self) -> BlochVector {
        BlochVector::new(
            self.m[(1, 0)].re,
            self.m[(1, 0)].im,
            0.5 * (self.m[(0, 0)] - self.m[(1, 1)]).re,
        )
    }
}
