//! Choi-state machinery: ρ_𝓔 = (I⊗𝓔)(|Φ⁺⟩⟨Φ⁺|) with subsystem A the input
//! leg (the untouched half of |Φ⁺⟩) and subsystem B the output of the map.
//! Trace preservation of 𝓔 is equivalent to Tr_B(ρ_𝓔) = I/2.

use nalgebra::{Matrix2, Matrix4};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::pauli::{c, C64};
use crate::state::DensityMatrix;

const TRACE_TOL: f64 = 1e-10;
const PSD_TOL: f64 = 1e-10;
const TP_TOL: f64 = 1e-8;

/// 4×4 Choi state: Hermitian with unit trace (within 1e-10). Positivity and
/// trace preservation are *not* construction invariants — linear inversion
/// legitimately produces unphysical Choi states — and are queried through
/// [`ChoiState::is_physical`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChoiState {
    m: Matrix4<C64>,
}

impl ChoiState {
    pub fn new(m: Matrix4<C64>) -> Result<Self> {
        let herm = linalg::hermiticity_deviation4(&m);
        if herm > TRACE_TOL {
            return Err(Error::NotHermitian { deviation: herm });
        }
        let tr_dev = (m.trace() - c(1.0, 0.0)).norm();
        if tr_dev > TRACE_TOL {
            return Err(Error::TraceNotOne { deviation: tr_dev });
        }
        Ok(ChoiState { m: linalg::hermitize4(&m) })
    }

    /// Choi state of the identity map, |Φ⁺⟩⟨Φ⁺|.
    pub fn identity() -> Self {
        choi_from_unitary(&Matrix2::identity()).unwrap()
    }

    pub fn matrix(&self) -> &Matrix4<C64> {
        &self.m
    }

    pub fn min_eigenvalue(&self) -> f64 {
        linalg::eigenvalues4(&self.m)[0]
    }

    /// Largest elementwise deviation of Tr_B from I/2.
    pub fn trace_preservation_deviation(&self) -> f64 {
        let ta = partial_trace_b(self) - Matrix2::identity() * c(0.5, 0.0);
        ta.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Completely positive and trace preserving, within tolerance
    /// (eigenvalues ≥ −1e-10, ‖Tr_B − I/2‖_max ≤ 1e-8).
    pub fn is_physical(&self) -> bool {
        self.min_eigenvalue() >= -PSD_TOL && self.trace_preservation_deviation() <= TP_TOL
    }
}

impl Serialize for ChoiState {
    /// 16 complex entries, row-major, each as an `[re, im]` pair.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<[f64; 2]> = (0..4)
            .flat_map(|r| (0..4).map(move |col| (r, col)))
            .map(|(r, col)| [self.m[(r, col)].re, self.m[(r, col)].im])
            .collect();
        entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChoiState {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = <Vec<[f64; 2]>>::deserialize(deserializer)?;
        if entries.len() != 16 {
            return Err(D::Error::invalid_length(entries.len(), &"16 complex entries"));
        }
        let mut m = Matrix4::zeros();
        for (k, [re, im]) in entries.into_iter().enumerate() {
            m[(k / 4, k % 4)] = c(re, im);
        }
        ChoiState::new(m).map_err(D::Error::custom)
    }
}

/// Choi state of a unitary map: (I⊗U)|Φ⁺⟩⟨Φ⁺|(I⊗U)†, rank 1.
pub fn choi_from_unitary(u: &Matrix2<C64>) -> Result<ChoiState> {
    let dev = (u.adjoint() * u - Matrix2::identity())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    if dev > 1e-10 {
        return Err(Error::NotUnitary { deviation: dev });
    }
    let mut choi = Matrix4::zeros();
    for k in 0..2 {
        for l in 0..2 {
            let mut basis = Matrix2::zeros();
            basis[(k, l)] = c(1.0, 0.0);
            let mut cell = Matrix2::zeros();
            cell[(k, l)] = c(0.5, 0.0);
            choi += cell.kronecker(&(u * basis * u.adjoint()));
        }
    }
    ChoiState::new(linalg::hermitize4(&choi))
}

/// Action of the encoded map: 𝓔(ρ) = 2 Tr_A[(ρ^T ⊗ I) ρ_𝓔].
///
/// Physical Choi inputs give a physical output; tiny (≤1e-12) rounding below
/// PSD is clamped away.
pub fn apply_choi(choi: &ChoiState, rho: &DensityMatrix) -> DensityMatrix {
    let rho_t_kron = rho.matrix().transpose().kronecker(&Matrix2::identity());
    let prod = rho_t_kron * choi.m;
    let out = partial_trace_a_raw(&prod) * c(2.0, 0.0);
    DensityMatrix::from_matrix_clamped(&out)
}

/// Trace over the output subsystem B.
pub fn partial_trace_b(choi: &ChoiState) -> Matrix2<C64> {
    partial_trace_b_raw(&choi.m)
}

pub fn partial_trace_b_raw(m: &Matrix4<C64>) -> Matrix2<C64> {
    let mut out = Matrix2::zeros();
    for a in 0..2 {
        for a2 in 0..2 {
            out[(a, a2)] = m[(2 * a, 2 * a2)] + m[(2 * a + 1, 2 * a2 + 1)];
        }
    }
    out
}

pub fn partial_trace_a_raw(m: &Matrix4<C64>) -> Matrix2<C64> {
    let mut out = Matrix2::zeros();
    for b in 0..2 {
        for b2 in 0..2 {
            out[(b, b2)] = m[(b, b2)] + m[(2 + b, 2 + b2)];
        }
    }
    out
}
