//! Dephasing-rotation evolution about a fixed axis n:
//!
//!   dρ/dt = i(Ω/2)[σ_n, ρ] + (1/2T₂)(σ_n ρ σ_n − ρ)
//!
//! For n = ẑ the closed-form solution is available ([`evolve_state`]); the
//! general axis is handled by a fixed-step 4th-order integrator
//! ([`lindblad_integrate`]). The commutator sign gives clockwise Bloch
//! rotation: x̂ → −ŷ at Ωt = π/2.

use nalgebra::{Matrix2, Matrix4, Vector2};
use serde::{Deserialize, Serialize};

use crate::bloch::BlochVector;
use crate::choi::ChoiState;
use crate::error::{Error, Result};
use crate::pauli::{c, sigma_x, sigma_y, sigma_z, C64};
use crate::state::DensityMatrix;

/// Rotation rate Ω (rad per time unit) and dephasing time T₂ (time units).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawEvolutionParams", into = "RawEvolutionParams")]
pub struct EvolutionParams {
    omega_rot: f64,
    t2: f64,
}

#[derive(Serialize, Deserialize)]
struct RawEvolutionParams {
    omega_rot: f64,
    t2: f64,
}

impl From<EvolutionParams> for RawEvolutionParams {
    fn from(ev: EvolutionParams) -> Self {
        RawEvolutionParams { omega_rot: ev.omega_rot, t2: ev.t2 }
    }
}

impl TryFrom<RawEvolutionParams> for EvolutionParams {
    type Error = Error;

    fn try_from(raw: RawEvolutionParams) -> Result<Self> {
        EvolutionParams::new(raw.omega_rot, raw.t2)
    }
}

impl EvolutionParams {
    pub fn new(omega_rot: f64, t2: f64) -> Result<Self> {
        if omega_rot.is_nan() || omega_rot < 0.0 {
            return Err(Error::NegativeRate { omega: omega_rot });
        }
        if t2.is_nan() || t2 <= 0.0 {
            return Err(Error::NonPositiveT2 { t2 });
        }
        Ok(EvolutionParams { omega_rot, t2 })
    }

    pub fn omega_rot(&self) -> f64 {
        self.omega_rot
    }

    pub fn t2(&self) -> f64 {
        self.t2
    }
}

/// Closed-form z-axis evolution:
///
///   ρ(t) = ½(1 + e^{−t/T₂} cos Ωt) ρ(0)
///        + ½(1 − e^{−t/T₂} cos Ωt) σ_z ρ(0) σ_z
///        + (i/2) e^{−t/T₂} sin Ωt [σ_z, ρ(0)]
pub fn evolve_state(rho0: &DensityMatrix, t: f64, ev: &EvolutionParams) -> Result<DensityMatrix> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTime { t });
    }
    let m = evolve_matrix_z(rho0.matrix(), t, ev);
    Ok(DensityMatrix::from_matrix_clamped(&m))
}

/// The same closed form applied to an arbitrary (not necessarily Hermitian)
/// matrix; the evolution map is linear, so the formula carries over entrywise.
fn evolve_matrix_z(m: &Matrix2<C64>, t: f64, ev: &EvolutionParams) -> Matrix2<C64> {
    let f = (-t / ev.t2).exp();
    let (s, co) = (ev.omega_rot * t).sin_cos();
    let sz = sigma_z();
    let zmz = sz * m * sz;
    let comm = sz * m - m * sz;
    m * c(0.5 * (1.0 + f * co), 0.0)
        + zmz * c(0.5 * (1.0 - f * co), 0.0)
        + comm * c(0.0, 0.5 * f * s)
}

/// Default integrator resolution: 1000 fixed steps per π/Ω of rotation, with
/// a floor of 1000 steps overall.
pub fn default_step_count(t: f64, ev: &EvolutionParams) -> usize {
    let periods = ev.omega_rot * t / std::f64::consts::PI;
    1000_usize.max((1000.0 * periods).ceil() as usize)
}

/// Numerical evolution about an arbitrary unit axis n (σ_n = n·σ) with the
/// default step count.
pub fn lindblad_integrate(
    rho0: &DensityMatrix,
    t: f64,
    axis: &BlochVector,
    ev: &EvolutionParams,
) -> Result<DensityMatrix> {
    lindblad_integrate_steps(rho0, t, axis, ev, default_step_count(t, ev))
}

/// As [`lindblad_integrate`] with an explicit step count (must be ≥ 1).
///
/// States are propagated in Bloch coordinates, where the master equation
/// reads ṙ = Ω (r × n) − (1/T₂)(r − (n·r)n). The map ρ ↔ r is linear and the
/// generator is too, so RK4 here is stage-for-stage identical to RK4 on the
/// matrix itself, just cheaper.
pub fn lindblad_integrate_steps(
    rho0: &DensityMatrix,
    t: f64,
    axis: &BlochVector,
    ev: &EvolutionParams,
    steps: usize,
) -> Result<DensityMatrix> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTime { t });
    }
    let n = axis.norm();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::AxisNotUnit { norm: n });
    }
    if steps == 0 {
        return Err(Error::ZeroSteps);
    }
    let h = t / steps as f64;
    let omega = ev.omega_rot;
    let inv_t2 = 1.0 / ev.t2;
    let rhs = |r: &BlochVector| -> BlochVector {
        let parallel = axis.scaled(axis.dot(r));
        r.cross(axis)
            .scaled(omega)
            .add(&parallel.add(&r.scaled(-1.0)).scaled(inv_t2))
    };
    let mut r = rho0.bloch();
    for _ in 0..steps {
        let k1 = rhs(&r);
        let k2 = rhs(&r.add(&k1.scaled(0.5 * h)));
        let k3 = rhs(&r.add(&k2.scaled(0.5 * h)));
        let k4 = rhs(&r.add(&k3.scaled(h)));
        let incr = k1.add(&k2.scaled(2.0)).add(&k3.scaled(2.0)).add(&k4);
        r = r.add(&incr.scaled(h / 6.0));
    }
    // truncation error can push a pure state fractionally outside the sphere
    let norm = r.norm();
    if norm > 1.0 {
        r = r.scaled(1.0 / norm);
    }
    DensityMatrix::from_bloch(&r)
}

/// Choi state of the evolution map for duration `t` about `axis`: each basis
/// matrix |k⟩⟨l| is propagated and assembled into ½ Σ |k⟩⟨l| ⊗ 𝓔(|k⟩⟨l|).
pub fn lindblad_choi(t: f64, axis: &BlochVector, ev: &EvolutionParams) -> Result<ChoiState> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTime { t });
    }
    let sigma_n = axis_operator(axis)?;
    let steps = default_step_count(t, ev);
    let mut choi = Matrix4::zeros();
    for k in 0..2 {
        for l in 0..2 {
            let mut basis = Matrix2::zeros();
            basis[(k, l)] = c(1.0, 0.0);
            let out = integrate_matrix(&basis, t, &sigma_n, ev, steps);
            let mut cell = Matrix2::zeros();
            cell[(k, l)] = c(0.5, 0.0);
            choi += cell.kronecker(&out);
        }
    }
    ChoiState::new(crate::linalg::hermitize4(&choi))
}

fn axis_operator(axis: &BlochVector) -> Result<Matrix2<C64>> {
    let n = axis.norm();
    if (n - 1.0).abs() > 1e-10 {
        return Err(Error::AxisNotUnit { norm: n });
    }
    Ok(sigma_x() * c(axis.x, 0.0) + sigma_y() * c(axis.y, 0.0) + sigma_z() * c(axis.z, 0.0))
}

/// Classic RK4 on dm/dt = i(Ω/2)[σ_n, m] + (1/2T₂)(σ_n m σ_n − m).
fn integrate_matrix(
    m0: &Matrix2<C64>,
    t: f64,
    sigma_n: &Matrix2<C64>,
    ev: &EvolutionParams,
    steps: usize,
) -> Matrix2<C64> {
    let h = t / steps as f64;
    let i_half_omega = c(0.0, 0.5 * ev.omega_rot);
    let inv_2t2 = c(0.5 / ev.t2, 0.0);
    let rhs = |m: &Matrix2<C64>| -> Matrix2<C64> {
        let sm = sigma_n * m;
        let ms = m * sigma_n;
        (sm - ms) * i_half_omega + (sm * sigma_n - m) * inv_2t2
    };
    let mut m = *m0;
    let half_h = c(0.5 * h, 0.0);
    let full_h = c(h, 0.0);
    let sixth_h = c(h / 6.0, 0.0);
    let two = c(2.0, 0.0);
    for _ in 0..steps {
        let k1 = rhs(&m);
        let k2 = rhs(&(m + k1 * half_h));
        let k3 = rhs(&(m + k2 * half_h));
        let k4 = rhs(&(m + k3 * full_h));
        m += (k1 + k2 * two + k3 * two + k4) * sixth_h;
    }
    m
}

/// Ket |0⟩ or |1⟩ (handy for tests and Choi assembly).
pub fn basis_ket(k: usize) -> Vector2<C64> {
    let mut v = Vector2::zeros();
    v[k] = c(1.0, 0.0);
    v
}
