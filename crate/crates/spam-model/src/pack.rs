//! Frozen flat layouts for optimizer parameter vectors.
//!
//! Method A (12): `[θ₂, r3x, r3y, r3z, r4x, r4y, r4z, ε₀, ε₁, θ_E2, θ_E3, φ_E3]`
//! with r⁽²⁾ = (sin θ₂, 0, cos θ₂), R⁽²⁾ = (sin θ_E2, 0, cos θ_E2) and
//! R⁽³⁾ = (sin θ_E3 cos φ_E3, sin θ_E3 sin φ_E3, cos θ_E3), so the hard
//! unit-norm and planarity constraints hold by construction.
//!
//! Method B (18): `[r2x, r2z, r3x, r3y, r3z, r4x, r4y, r4z, ε₀, ε₁,
//! R2x, R2y, R2z, R3x, R3y, R3z, Ω, T₂]`.
//!
//! Method C (25): `[r2x, r2z, r3x, r3y, r3z, r4x, r4y, r4z, r5x, r5y, r5z,
//! ε₀, ε₁, R2x, R2y, R2z, R3x, R3y, R3z, R4x, R4y, R4z, R5x, R5y, R5z]`.

use qubit_core::EvolutionParams;

use crate::error::{Error, Result};
use crate::types::{Method, MeasurementParams, SpamParameterSet, StateParams, ZMeasurementNoise};

/// Flattens a parameter set into its method's layout. Angles are recovered
/// from direction components, so `unpack(pack(p)) == p` up to floating point
/// for any set built by [`unpack`].
pub fn pack(params: &SpamParameterSet) -> Vec<f64> {
    let mut x = Vec::with_capacity(params.method().n_parameters());
    match params.method() {
        Method::A => {
            let r2 = params.states()[1].bloch();
            x.push(r2.x.atan2(r2.z));
            for s in &params.states()[2..] {
                let r = s.bloch();
                x.extend_from_slice(&[r.x, r.y, r.z]);
            }
            x.push(params.noise().eps0);
            x.push(params.noise().eps1);
            let m1 = params.measurements()[1].direction();
            x.push(m1.x.atan2(m1.z));
            let m2 = params.measurements()[2].direction();
            x.push(m2.z.clamp(-1.0, 1.0).acos());
            x.push(m2.y.atan2(m2.x));
        }
        Method::B | Method::C => {
            let r2 = params.states()[1].bloch();
            x.push(r2.x);
            x.push(r2.z);
            for s in &params.states()[2..] {
                let r = s.bloch();
                x.extend_from_slice(&[r.x, r.y, r.z]);
            }
            x.push(params.noise().eps0);
            x.push(params.noise().eps1);
            for m in &params.measurements()[1..] {
                let dir = m.direction();
                x.extend_from_slice(&[dir.x, dir.y, dir.z]);
            }
            if let Some(ev) = params.evolution() {
                x.push(ev.omega_rot());
                x.push(ev.t2());
            }
        }
    }
    debug_assert_eq!(x.len(), params.method().n_parameters());
    x
}

/// Rebuilds a structured set from a flat vector in the given method's
/// layout. Method B's trailing (Ω, T₂) must be admissible evolution
/// parameters; other entries are only checked for finiteness here, with
/// physicality enforced later by `realize`.
pub fn unpack(method: Method, x: &[f64]) -> Result<SpamParameterSet> {
    if x.len() != method.n_parameters() {
        return Err(Error::WrongLength {
            method,
            expected: method.n_parameters(),
            got: x.len(),
        });
    }
    if !x.iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite);
    }
    match method {
        Method::A => {
            let theta2 = x[0];
            let states = vec![
                StateParams::FixedPlusZ,
                StateParams::PlanarX { rx: theta2.sin(), rz: theta2.cos() },
                StateParams::General { rx: x[1], ry: x[2], rz: x[3] },
                StateParams::General { rx: x[4], ry: x[5], rz: x[6] },
            ];
            let noise = ZMeasurementNoise { eps0: x[7], eps1: x[8] };
            let (te2, te3, pe3) = (x[9], x[10], x[11]);
            let measurements = vec![
                MeasurementParams::FixedPlusZ,
                MeasurementParams::General { rx: te2.sin(), ry: 0.0, rz: te2.cos() },
                MeasurementParams::General {
                    rx: te3.sin() * pe3.cos(),
                    ry: te3.sin() * pe3.sin(),
                    rz: te3.cos(),
                },
            ];
            SpamParameterSet::new(method, states, measurements, noise, None)
        }
        Method::B => {
            let states = vec![
                StateParams::FixedPlusZ,
                StateParams::PlanarX { rx: x[0], rz: x[1] },
                StateParams::General { rx: x[2], ry: x[3], rz: x[4] },
                StateParams::General { rx: x[5], ry: x[6], rz: x[7] },
            ];
            let noise = ZMeasurementNoise { eps0: x[8], eps1: x[9] };
            let measurements = vec![
                MeasurementParams::FixedPlusZ,
                MeasurementParams::General { rx: x[10], ry: x[11], rz: x[12] },
                MeasurementParams::General { rx: x[13], ry: x[14], rz: x[15] },
            ];
            let evolution = EvolutionParams::new(x[16], x[17])?;
            SpamParameterSet::new(method, states, measurements, noise, Some(evolution))
        }
        Method::C => {
            let states = vec![
                StateParams::FixedPlusZ,
                StateParams::PlanarX { rx: x[0], rz: x[1] },
                StateParams::General { rx: x[2], ry: x[3], rz: x[4] },
                StateParams::General { rx: x[5], ry: x[6], rz: x[7] },
                StateParams::General { rx: x[8], ry: x[9], rz: x[10] },
            ];
            let noise = ZMeasurementNoise { eps0: x[11], eps1: x[12] };
            let measurements = vec![
                MeasurementParams::FixedPlusZ,
                MeasurementParams::General { rx: x[13], ry: x[14], rz: x[15] },
                MeasurementParams::General { rx: x[16], ry: x[17], rz: x[18] },
                MeasurementParams::General { rx: x[19], ry: x[20], rz: x[21] },
                MeasurementParams::General { rx: x[22], ry: x[23], rz: x[24] },
            ];
            SpamParameterSet::new(method, states, measurements, noise, None)
        }
    }
}
