//! Multi-start initialization strategies.
//!
//! Three levels of prior knowledge are modelled: `NearTruth` perturbs the
//! true parameters by a relative amount (a test-harness device standing in
//! for "initial parameters within a couple percent of truth"),
//! `NearIdeal` starts from the nominal axes with slight depolarization and
//! readout error, and `Ignorant` draws directions uniformly at random.
//! The evolving method always starts its rate and decay time at the
//! caller-supplied nominal values with a small jitter: the drive frequency
//! is experimentally known, and the default time grid undersamples the
//! oscillation, so a frequency-blind start can alias onto a wrong branch.

use qubit_core::EvolutionParams;
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use spam_model::{pack, Method, SpamParameterSet};

use crate::error::{Error, Result};

/// How initial parameter vectors are produced. Restart 0 is the strategy's
/// base point; further restarts jitter it (or redraw, for `Ignorant`).
#[derive(Debug, Clone)]
pub enum InitStrategy {
    /// Perturb the true parameters coordinate-wise by relative `delta`.
    NearTruth { truth: SpamParameterSet, delta: f64 },
    /// Nominal axes with ‖r‖ = 0.95 and ε = 0.02.
    NearIdeal { nominal_evolution: Option<EvolutionParams> },
    /// Uniformly random directions; norms in [0.8, 1], ε in [0, 0.1].
    Ignorant { nominal_evolution: Option<EvolutionParams> },
}

impl InitStrategy {
    /// The per-method default: the constrained method follows the
    /// near-truth protocol, the evolving method starts ignorant, the
    /// enlarged static method starts near the ideal axes.
    pub fn method_default(
        method: Method,
        truth: &SpamParameterSet,
        nominal_evolution: Option<EvolutionParams>,
    ) -> InitStrategy {
        match method {
            Method::A => InitStrategy::NearTruth { truth: truth.clone(), delta: 0.02 },
            Method::B => InitStrategy::Ignorant { nominal_evolution },
            Method::C => InitStrategy::NearIdeal { nominal_evolution },
        }
    }
}

/// Index classes of one packed layout, used to give each coordinate kind an
/// appropriate jitter scale.
#[derive(PartialEq)]
enum Coord {
    Angle,
    Direction,
    Noise,
    Rate,
    Decay,
}

fn coord_kind(method: Method, idx: usize) -> Coord {
    match method {
        Method::A => match idx {
            0 | 9 | 10 | 11 => Coord::Angle,
            7 | 8 => Coord::Noise,
            _ => Coord::Direction,
        },
        Method::B => match idx {
            8 | 9 => Coord::Noise,
            16 => Coord::Rate,
            17 => Coord::Decay,
            _ => Coord::Direction,
        },
        Method::C => match idx {
            11 | 12 => Coord::Noise,
            _ => Coord::Direction,
        },
    }
}

/// Initial packed vectors for a fit: `n_restarts` points drawn from the
/// strategy, deterministically in the given generator's state.
pub fn initial_points(
    method: Method,
    strategy: &InitStrategy,
    n_restarts: usize,
    rng: &mut ChaCha12Rng,
) -> Result<Vec<Vec<f64>>> {
    let mut points = Vec::with_capacity(n_restarts);
    match strategy {
        InitStrategy::NearTruth { truth, delta } => {
            let base = truth_in_layout(method, truth)?;
            for _ in 0..n_restarts {
                let point = base
                    .iter()
                    .map(|&x| x + delta * x.abs().max(0.1) * rng.random_range(-1.0..1.0))
                    .collect();
                points.push(point);
            }
        }
        InitStrategy::NearIdeal { nominal_evolution } => {
            let base = near_ideal_base(method, *nominal_evolution)?;
            points.push(base.clone());
            for _ in 1..n_restarts {
                points.push(jittered(method, &base, rng));
            }
        }
        InitStrategy::Ignorant { nominal_evolution } => {
            for _ in 0..n_restarts {
                points.push(ignorant_draw(method, *nominal_evolution, rng)?);
            }
        }
    }
    Ok(points)
}

/// The truth expressed in the target method's layout. For the constrained
/// method the truth generally violates the hard constraints, so it is
/// snapped onto them: norms are dropped in favour of pure angles and the
/// out-of-plane component of the second measurement is discarded.
fn truth_in_layout(method: Method, truth: &SpamParameterSet) -> Result<Vec<f64>> {
    if truth.states().len() != method.n_states()
        || truth.measurements().len() != method.n_measurements()
    {
        return Err(Error::BadInit {
            detail: format!(
                "truth shape {}x{} does not match method {method}",
                truth.states().len(),
                truth.measurements().len()
            ),
        });
    }
    if method != Method::A {
        if method.has_evolution() != truth.evolution().is_some() {
            return Err(Error::BadInit {
                detail: format!("truth evolution parameters do not fit method {method}"),
            });
        }
        return Ok(pack(truth));
    }
    let r2 = truth.states()[1].bloch();
    let m1 = truth.measurements()[1].direction();
    let m2 = truth.measurements()[2].direction();
    let m2n = m2.normalized().ok_or_else(|| Error::BadInit {
        detail: "truth measurement 2 has zero direction".into(),
    })?;
    let mut x = Vec::with_capacity(12);
    x.push(r2.x.atan2(r2.z));
    for s in &truth.states()[2..] {
        let r = s.bloch();
        x.extend_from_slice(&[r.x, r.y, r.z]);
    }
    x.push(truth.noise().eps0);
    x.push(truth.noise().eps1);
    x.push(m1.x.atan2(m1.z));
    x.push(m2n.z.clamp(-1.0, 1.0).acos());
    x.push(m2n.y.atan2(m2n.x));
    Ok(x)
}

/// Ideal axes softened to ‖r‖ = 0.95 with ε = 0.02, in packed layout.
/// Angle coordinates stay exactly on the axes (their norms are pinned).
fn near_ideal_base(method: Method, nominal: Option<EvolutionParams>) -> Result<Vec<f64>> {
    const NORM: f64 = 0.95;
    const EPS: f64 = 0.02;
    let h = std::f64::consts::FRAC_PI_2;
    let base = match method {
        Method::A => vec![h, 0.0, NORM, 0.0, 0.0, 0.0, -NORM, EPS, EPS, h, h, h],
        Method::B => {
            let ev = nominal.ok_or_else(|| Error::BadInit {
                detail: "method B initialization needs nominal evolution parameters".into(),
            })?;
            vec![
                NORM, 0.0, 0.0, NORM, 0.0, 0.0, 0.0, -NORM, EPS, EPS, NORM, 0.0, 0.0, 0.0, NORM,
                0.0, ev.omega_rot(), ev.t2(),
            ]
        }
        Method::C => {
            let d = NORM / 3f64.sqrt();
            vec![
                NORM, 0.0, 0.0, NORM, 0.0, 0.0, 0.0, -NORM, d, d, d, EPS, EPS, NORM, 0.0, 0.0,
                0.0, NORM, 0.0, d, d, -d, d, -d, d,
            ]
        }
    };
    debug_assert_eq!(base.len(), method.n_parameters());
    Ok(base)
}

/// Coordinate-wise jitter sized by coordinate kind: directions and angles
/// move a few hundredths, noise a little, the evolution pair relatively.
fn jittered(method: Method, base: &[f64], rng: &mut ChaCha12Rng) -> Vec<f64> {
    base.iter()
        .enumerate()
        .map(|(idx, &x)| match coord_kind(method, idx) {
            Coord::Angle | Coord::Direction => x + rng.random_range(-0.08..0.08),
            Coord::Noise => (x + rng.random_range(-0.01..0.01)).max(0.0),
            Coord::Rate => x * (1.0 + rng.random_range(-0.02..0.02)),
            Coord::Decay => x * (1.0 + rng.random_range(-0.05..0.05)),
        })
        .collect()
}

/// A fresh direction-ignorant draw. The planar state keeps a positive x
/// component (the gauge the model fixes); everything else is uniform.
fn ignorant_draw(
    method: Method,
    nominal: Option<EvolutionParams>,
    rng: &mut ChaCha12Rng,
) -> Result<Vec<f64>> {
    let mut x = Vec::with_capacity(method.n_parameters());
    let sphere = |rng: &mut ChaCha12Rng, norm_lo: f64| {
        let z: f64 = rng.random_range(-1.0..1.0);
        let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let s = (1.0 - z * z).max(0.0).sqrt();
        let n: f64 = rng.random_range(norm_lo..1.0);
        [n * s * phi.cos(), n * s * phi.sin(), n * z]
    };
    match method {
        Method::A => {
            x.push(rng.random_range(0.2..std::f64::consts::PI - 0.2));
            for _ in 0..2 {
                x.extend_from_slice(&sphere(rng, 0.8));
            }
            x.push(rng.random_range(0.0..0.1));
            x.push(rng.random_range(0.0..0.1));
            x.push(rng.random_range(0.2..std::f64::consts::PI - 0.2));
            x.push(rng.random_range(0.2..std::f64::consts::PI - 0.2));
            x.push(rng.random_range(-std::f64::consts::PI..std::f64::consts::PI));
        }
        Method::B | Method::C => {
            let theta = rng.random_range(0.2..std::f64::consts::PI - 0.2);
            let norm = rng.random_range(0.8..1.0);
            x.push(norm * theta.sin());
            x.push(norm * theta.cos());
            for _ in 0..method.n_states() - 2 {
                x.extend_from_slice(&sphere(rng, 0.8));
            }
            x.push(rng.random_range(0.0..0.1));
            x.push(rng.random_range(0.0..0.1));
            for _ in 0..method.n_measurements() - 1 {
                x.extend_from_slice(&sphere(rng, 0.9));
            }
            if method.has_evolution() {
                let ev = nominal.ok_or_else(|| Error::BadInit {
                    detail: "method B initialization needs nominal evolution parameters".into(),
                })?;
                x.push(ev.omega_rot() * (1.0 + rng.random_range(-0.02..0.02)));
                x.push(ev.t2() * (1.0 + rng.random_range(-0.05..0.05)));
            }
        }
    }
    debug_assert_eq!(x.len(), method.n_parameters());
    Ok(x)
}
