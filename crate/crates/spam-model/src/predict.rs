//! Outcome probability predictions in closed form.
//!
//! For state r, measurement direction R and noise (ε₀, ε₁) the "+" outcome
//! probability is the affine form
//!
//!   p = e₀ + e·r,  e₀ = ½(1 + ε₁ − ε₀),  e = ½(1 − ε₀ − ε₁) R.
//!
//! Under free evolution about ẑ at rate Ω (clockwise, x̂ → −ŷ) with
//! transverse decay time T₂ this becomes
//!
//!   p(t) = a + e^{−t/T₂} (b cos Ωt − c sin Ωt),
//!   a = e₀ + e_z r_z,  b = e_x r_x + e_y r_y,  c = e_y r_x − e_x r_y.
//!
//! These forms are plain polynomials in the parameters, so they remain
//! finite and smooth when an optimizer steps slightly outside the physical
//! set; physicality is enforced separately by [`crate::realize`].

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::types::{Method, SpamParameterSet};

/// "+" outcome probabilities for every (state, measurement) pair at t = 0,
/// as an `n_states × n_measurements` matrix. Works for any method.
pub fn probability_table(params: &SpamParameterSet) -> DMatrix<f64> {
    let noise = params.noise();
    let e0 = 0.5 * (1.0 + noise.eps1 - noise.eps0);
    let scale = 0.5 * (1.0 - noise.eps0 - noise.eps1);
    let n_s = params.states().len();
    let n_m = params.measurements().len();
    DMatrix::from_fn(n_s, n_m, |i, j| {
        let r = params.states()[i].bloch();
        let e = params.measurements()[j].direction().scaled(scale);
        e0 + e.dot(&r)
    })
}

/// Static prediction for methods whose data are taken at t = 0 only.
/// Method B identifies its parameters through a timeseries, so asking it
/// for a static table is a usage error.
pub fn predict_static(params: &SpamParameterSet) -> Result<DMatrix<f64>> {
    if params.method() == Method::B {
        return Err(Error::MethodMismatch { op: "predict_static", method: Method::B });
    }
    Ok(probability_table(params))
}

/// Timeseries prediction for method B: one probability table per requested
/// time, each `n_states × n_measurements`. Errors for static methods and
/// for negative times.
pub fn predict_timeseries(params: &SpamParameterSet, times: &[f64]) -> Result<Vec<DMatrix<f64>>> {
    let method = params.method();
    if method != Method::B {
        return Err(Error::MethodMismatch { op: "predict_timeseries", method });
    }
    let ev = params.evolution().expect("method B always carries evolution parameters");
    let (omega, t2) = (ev.omega_rot(), ev.t2());
    for &t in times {
        if t < 0.0 {
            return Err(Error::Core(qubit_core::Error::NegativeTime { t }));
        }
    }
    let noise = params.noise();
    let e0 = 0.5 * (1.0 + noise.eps1 - noise.eps0);
    let scale = 0.5 * (1.0 - noise.eps0 - noise.eps1);
    let n_s = params.states().len();
    let n_m = params.measurements().len();
    let mut tables = Vec::with_capacity(times.len());
    for &t in times {
        let envelope = (-t / t2).exp();
        let (sin_wt, cos_wt) = (omega * t).sin_cos();
        tables.push(DMatrix::from_fn(n_s, n_m, |i, j| {
            let r = params.states()[i].bloch();
            let e = params.measurements()[j].direction().scaled(scale);
            let a = e0 + e.z * r.z;
            let b = e.x * r.x + e.y * r.y;
            let c = e.y * r.x - e.x * r.y;
            a + envelope * (b * cos_wt - c * sin_wt)
        }));
    }
    Ok(tables)
}
