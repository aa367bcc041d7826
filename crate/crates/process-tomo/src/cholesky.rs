//! Cholesky parametrization of a 4×4 density operator,
//!
//!   ρ(t) = T†T / Tr(T†T),
//!
//! with T lower triangular: real diagonal entries and complex strict lower
//! entries, 16 real degrees of freedom in total. ρ(t) is Hermitian,
//! positive semidefinite and unit-trace for every t with T ≠ 0, so a
//! minimizer over t can never leave the positive cone.

use nalgebra::Matrix4;
use qubit_core::{linalg, C64};
use qubit_core::pauli::c;

use crate::error::{Error, Result};

/// Eigenvalue shift making the factorization of a singular clamped input
/// well defined; small enough to stay far inside every comparison budget.
const FACTOR_SHIFT: f64 = 1e-10;

/// Parameter layout, row-major over the lower triangle with real diagonals:
///
///   T[0,0] = t0
///   T[1,0] = t1 + i t2     T[1,1] = t3
///   T[2,0] = t4 + i t5     T[2,1] = t6 + i t7      T[2,2] = t8
///   T[3,0] = t9 + i t10    T[3,1] = t11 + i t12    T[3,2] = t13 + i t14    T[3,3] = t15
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CholeskyParams {
    t: [f64; 16],
}

impl CholeskyParams {
    pub fn new(t: [f64; 16]) -> Self {
        CholeskyParams { t }
    }

    pub fn values(&self) -> &[f64; 16] {
        &self.t
    }

    /// The lower-triangular factor T.
    pub fn factor(&self) -> Matrix4<C64> {
        let t = &self.t;
        let mut m = Matrix4::zeros();
        m[(0, 0)] = c(t[0], 0.0);
        m[(1, 0)] = c(t[1], t[2]);
        m[(1, 1)] = c(t[3], 0.0);
        m[(2, 0)] = c(t[4], t[5]);
        m[(2, 1)] = c(t[6], t[7]);
        m[(2, 2)] = c(t[8], 0.0);
        m[(3, 0)] = c(t[9], t[10]);
        m[(3, 1)] = c(t[11], t[12]);
        m[(3, 2)] = c(t[13], t[14]);
        m[(3, 3)] = c(t[15], 0.0);
        m
    }

    /// ρ(t) = T†T / Tr(T†T); fails only when the factor vanishes.
    pub fn density(&self) -> Result<qubit_core::ChoiState> {
        let t = self.factor();
        let gram = t.adjoint() * t;
        let trace = gram.trace().re;
        if !(trace > 1e-300) || !trace.is_finite() {
            return Err(Error::DegenerateParams);
        }
        let m = gram * c(1.0 / trace, 0.0);
        Ok(qubit_core::ChoiState::new(linalg::hermitize4(&m))?)
    }

    /// Factors the positive-clamped input so that ρ(t) reproduces it up to
    /// the clamp and a 1e-10 diagonal shift. This is the warm start for
    /// constrained maximum likelihood.
    pub fn from_choi(choi: &qubit_core::ChoiState) -> Self {
        let clamped = linalg::psd_clamp4(choi.matrix(), true);
        let shifted = clamped + Matrix4::identity() * c(FACTOR_SHIFT, 0.0);
        // A lower-triangular T with T†T = M is the adjoint of an upper
        // factor U with UU† = M; flipping row and column order turns that
        // into an ordinary Cholesky problem.
        let chol = flip(&shifted)
            .cholesky()
            .expect("clamped matrix plus a positive shift is positive definite");
        let u = flip(&chol.l());
        let t_mat = u.adjoint();
        let mut t = [0.0; 16];
        t[0] = t_mat[(0, 0)].re;
        t[1] = t_mat[(1, 0)].re;
        t[2] = t_mat[(1, 0)].im;
        t[3] = t_mat[(1, 1)].re;
        t[4] = t_mat[(2, 0)].re;
        t[5] = t_mat[(2, 0)].im;
        t[6] = t_mat[(2, 1)].re;
        t[7] = t_mat[(2, 1)].im;
        t[8] = t_mat[(2, 2)].re;
        t[9] = t_mat[(3, 0)].re;
        t[10] = t_mat[(3, 0)].im;
        t[11] = t_mat[(3, 1)].re;
        t[12] = t_mat[(3, 1)].im;
        t[13] = t_mat[(3, 2)].re;
        t[14] = t_mat[(3, 2)].im;
        t[15] = t_mat[(3, 3)].re;
        CholeskyParams { t }
    }
}

/// Reverses row and column order, conjugating lower and upper triangularity.
fn flip(m: &Matrix4<C64>) -> Matrix4<C64> {
    let mut out = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            out[(i, j)] = m[(3 - i, 3 - j)];
        }
    }
    out
}
