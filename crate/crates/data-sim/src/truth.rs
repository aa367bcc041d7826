//! Ground-truth SPAM sets with controlled imperfections.
//!
//! Starting from the ideal axes, each non-reference direction is rotated by
//! an angle drawn from Normal(s, s/5) degrees (s = `systematic_angle_deg`)
//! about a uniformly random perpendicular axis, and each norm and readout
//! error picks up an independent |Normal(0, scale)| draw truncated to
//! [0, 0.3] (scale = `stochastic_scale`). The gauge anchors stay exact:
//! state 0 is |0⟩⟨0|, measurement 0 points along ẑ, and state 1 stays in
//! the x-z plane (its in-plane angle and norm still wander).
//!
//! The result is a deliberately general set: every free measurement leaves
//! the x-z plane and loses norm, so the constrained 12-parameter model is
//! misspecified against it while the free models are not.

use qubit_core::{BlochVector, EvolutionParams};
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use spam_model::{
    ideal_measurement_directions, ideal_state_directions, MeasurementParams, Method,
    SpamParameterSet, StateParams, ZMeasurementNoise,
};

use crate::error::{Error, Result};
use crate::seeds::rng_from;

/// Scales of the simulated imperfections plus the true evolution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GroundTruthConfig {
    /// Scale of direction errors in degrees; individual angles are drawn
    /// from Normal(scale, scale/5).
    pub systematic_angle_deg: f64,
    /// Scale of norm shrinkage and readout error draws.
    pub stochastic_scale: f64,
    /// True rotation rate about ẑ during free evolution.
    pub omega_rot: f64,
    /// True transverse decay time.
    pub t2: f64,
    /// Seed making the draw reproducible.
    pub seed: u64,
}

impl Default for GroundTruthConfig {
    fn default() -> Self {
        GroundTruthConfig {
            systematic_angle_deg: 10.0,
            stochastic_scale: 0.05,
            omega_rot: 1.0,
            t2: 100.0,
            seed: 0,
        }
    }
}

impl GroundTruthConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.systematic_angle_deg.is_finite() || self.systematic_angle_deg < 0.0 {
            return Err(Error::BadConfig {
                detail: format!("systematic angle must be ≥ 0, got {}", self.systematic_angle_deg),
            });
        }
        if !self.stochastic_scale.is_finite() || !(0.0..0.5).contains(&self.stochastic_scale) {
            return Err(Error::BadConfig {
                detail: format!("stochastic scale must lie in [0, 0.5), got {}", self.stochastic_scale),
            });
        }
        if !self.omega_rot.is_finite() || self.omega_rot < 0.0 {
            return Err(Error::BadConfig {
                detail: format!("rotation rate must be ≥ 0, got {}", self.omega_rot),
            });
        }
        if !self.t2.is_finite() || self.t2 <= 0.0 {
            return Err(Error::BadConfig {
                detail: format!("decay time must be > 0, got {}", self.t2),
            });
        }
        Ok(())
    }
}

/// Draws a ground-truth set for the given method. The static methods share
/// their truth shape with their model; the constrained method fits a truth
/// of the free 4 × 3 shape (its own assumptions intentionally do not hold
/// in truth). Deterministic in `cfg.seed`.
pub fn make_ground_truth(cfg: &GroundTruthConfig, method: Method) -> Result<SpamParameterSet> {
    cfg.validate()?;
    let shape = match method {
        Method::A | Method::B => Method::B,
        Method::C => Method::C,
    };
    let mut rng = rng_from(cfg.seed);
    let mut draw = Draws::new(cfg);

    let noise = ZMeasurementNoise {
        eps0: draw.stochastic(&mut rng),
        eps1: draw.stochastic(&mut rng),
    };

    let mut states = Vec::with_capacity(shape.n_states());
    for (k, ideal) in ideal_state_directions(shape).iter().enumerate() {
        states.push(match k {
            0 => StateParams::FixedPlusZ,
            1 => {
                // In-plane rotation of the nominal x̂ axis: polar angle from
                // +z moves off π/2 by a signed systematic draw.
                let theta = std::f64::consts::FRAC_PI_2 + draw.signed_angle(&mut rng);
                let norm = 1.0 - draw.stochastic(&mut rng);
                StateParams::PlanarX { rx: norm * theta.sin(), rz: norm * theta.cos() }
            }
            _ => {
                let r = draw.tilted_direction(&mut rng, ideal);
                let norm = 1.0 - draw.stochastic(&mut rng);
                StateParams::General { rx: norm * r.x, ry: norm * r.y, rz: norm * r.z }
            }
        });
    }

    let mut measurements = Vec::with_capacity(shape.n_measurements());
    for (k, ideal) in ideal_measurement_directions(shape).iter().enumerate() {
        measurements.push(if k == 0 {
            MeasurementParams::FixedPlusZ
        } else {
            let r = draw.tilted_direction(&mut rng, ideal);
            let norm = 1.0 - draw.stochastic(&mut rng);
            MeasurementParams::General { rx: norm * r.x, ry: norm * r.y, rz: norm * r.z }
        });
    }

    let evolution = shape
        .has_evolution()
        .then(|| EvolutionParams::new(cfg.omega_rot, cfg.t2))
        .transpose()?;
    Ok(SpamParameterSet::new(shape, states, measurements, noise, evolution)?)
}

/// The two elementary error distributions, drawn in a fixed order so the
/// truth is a pure function of the seed.
struct Draws {
    angle: Normal<f64>,
    stochastic: Normal<f64>,
}

impl Draws {
    fn new(cfg: &GroundTruthConfig) -> Self {
        let s = cfg.systematic_angle_deg.to_radians();
        Draws {
            angle: Normal::new(s, s / 5.0).expect("validated scale is finite"),
            stochastic: Normal::new(0.0, cfg.stochastic_scale).expect("validated scale is finite"),
        }
    }

    /// |Normal(0, scale)| truncated to [0, 0.3] by redrawing.
    fn stochastic(&mut self, rng: &mut ChaCha12Rng) -> f64 {
        loop {
            let v = self.stochastic.sample(rng).abs();
            if v <= 0.3 {
                return v;
            }
        }
    }

    /// Normal(s, s/5) radians with a uniformly random sign.
    fn signed_angle(&mut self, rng: &mut ChaCha12Rng) -> f64 {
        let a = self.angle.sample(rng);
        if rng.random_bool(0.5) {
            a
        } else {
            -a
        }
    }

    /// The ideal direction rotated by a systematic angle about a uniformly
    /// random axis perpendicular to it.
    fn tilted_direction(&mut self, rng: &mut ChaCha12Rng, ideal: &BlochVector) -> BlochVector {
        let angle = self.angle.sample(rng);
        let phi = rng.random_range(0.0..std::f64::consts::TAU);
        let u = ideal.any_perpendicular();
        let v = ideal.cross(&u);
        let axis = u.scaled(phi.cos()).add(&v.scaled(phi.sin()));
        ideal.rotated_about(&axis, angle)
    }
}
