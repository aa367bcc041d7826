use qubit_core::{BlochVector, EvolutionParams};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reconstruction method variants, distinguished by which extra assumptions
/// or extra data they bring:
///
/// * `A`: 4 states × 3 measurements, static data, hard unit-norm/planarity
///   constraints on the second state and both extra measurements (12 free
///   parameters);
/// * `B`: the same 4 × 3 set, fully general within physicality, identified
///   through free evolution with unknown (Ω, T₂) (18 parameters);
/// * `C`: 5 states × 5 measurements, static data, no extra assumptions
///   (25 parameters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    A,
    B,
    C,
}

impl Method {
    pub fn n_states(self) -> usize {
        match self {
            Method::A | Method::B => 4,
            Method::C => 5,
        }
    }

    pub fn n_measurements(self) -> usize {
        match self {
            Method::A | Method::B => 3,
            Method::C => 5,
        }
    }

    /// Number of free real parameters in the packed vector.
    pub fn n_parameters(self) -> usize {
        match self {
            Method::A => 12,
            Method::B => 18,
            Method::C => 25,
        }
    }

    pub fn has_evolution(self) -> bool {
        matches!(self, Method::B)
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::A => write!(f, "A"),
            Method::B => write!(f, "B"),
            Method::C => write!(f, "C"),
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "A" | "a" => Ok(Method::A),
            "B" | "b" => Ok(Method::B),
            "C" | "c" => Ok(Method::C),
            other => Err(format!("unknown method '{other}' (expected A, B or C)")),
        }
    }
}

/// Readout error probabilities shared by every measurement of a set:
/// `eps0` flips an ideal "+" outcome, `eps1` flips an ideal "−" outcome, so
/// the z-measurement on |0⟩⟨0| succeeds with probability 1 − eps0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZMeasurementNoise {
    pub eps0: f64,
    pub eps1: f64,
}

impl ZMeasurementNoise {
    pub fn ideal() -> Self {
        ZMeasurementNoise { eps0: 0.0, eps1: 0.0 }
    }

    pub(crate) fn check_physical(&self) -> Result<()> {
        for v in [self.eps0, self.eps1] {
            if !(0.0..0.5).contains(&v) {
                return Err(Error::NoiseBound { value: v });
            }
        }
        Ok(())
    }
}

/// Bloch parametrization of one prepared state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum StateParams {
    /// Exactly |0⟩⟨0|; carries no parameters (gauge anchor).
    FixedPlusZ,
    /// Constrained to the x-z plane (r_y = 0).
    PlanarX { rx: f64, rz: f64 },
    General { rx: f64, ry: f64, rz: f64 },
}

impl StateParams {
    pub fn bloch(&self) -> BlochVector {
        match *self {
            StateParams::FixedPlusZ => BlochVector::Z,
            StateParams::PlanarX { rx, rz } => BlochVector::new(rx, 0.0, rz),
            StateParams::General { rx, ry, rz } => BlochVector::new(rx, ry, rz),
        }
    }

    pub fn n_free(&self) -> usize {
        match self {
            StateParams::FixedPlusZ => 0,
            StateParams::PlanarX { .. } => 2,
            StateParams::General { .. } => 3,
        }
    }

    fn is_finite(&self) -> bool {
        let r = self.bloch();
        r.x.is_finite() && r.y.is_finite() && r.z.is_finite()
    }
}

/// Direction parametrization of one measurement; the full effect also uses
/// the shared [`ZMeasurementNoise`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MeasurementParams {
    /// The reference z measurement: direction exactly ẑ, no parameters.
    FixedPlusZ,
    General { rx: f64, ry: f64, rz: f64 },
}

impl MeasurementParams {
    pub fn direction(&self) -> BlochVector {
        match *self {
            MeasurementParams::FixedPlusZ => BlochVector::Z,
            MeasurementParams::General { rx, ry, rz } => BlochVector::new(rx, ry, rz),
        }
    }

    pub fn n_free(&self) -> usize {
        match self {
            MeasurementParams::FixedPlusZ => 0,
            MeasurementParams::General { .. } => 3,
        }
    }

    fn is_finite(&self) -> bool {
        let r = self.direction();
        r.x.is_finite() && r.y.is_finite() && r.z.is_finite()
    }
}

/// Tolerance for method A's hard constraints (unit norms, planarity). Sets
/// built by `unpack` satisfy them exactly; hand-built sets must come close.
const CONSTRAINT_TOL: f64 = 1e-9;

/// Complete parametrization of one SPAM set: ordered states, ordered
/// measurements, shared readout noise, and (method B) evolution parameters.
///
/// Construction validates structure: variant layout per method, finiteness,
/// method A's hard constraints, and evolution presence. Norm bounds ‖r‖ ≤ 1
/// are deliberately *not* enforced here — optimizer trial points may wander
/// slightly outside the ball — but are enforced by [`crate::realize`] before
/// any operator is built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpamParameterSet", into = "RawSpamParameterSet")]
pub struct SpamParameterSet {
    method: Method,
    states: Vec<StateParams>,
    measurements: Vec<MeasurementParams>,
    noise: ZMeasurementNoise,
    evolution: Option<EvolutionParams>,
}

#[derive(Serialize, Deserialize)]
struct RawSpamParameterSet {
    method: Method,
    states: Vec<StateParams>,
    measurements: Vec<MeasurementParams>,
    noise: ZMeasurementNoise,
    evolution: Option<EvolutionParams>,
}

impl From<SpamParameterSet> for RawSpamParameterSet {
    fn from(p: SpamParameterSet) -> Self {
        RawSpamParameterSet {
            method: p.method,
            states: p.states,
            measurements: p.measurements,
            noise: p.noise,
            evolution: p.evolution,
        }
    }
}

impl TryFrom<RawSpamParameterSet> for SpamParameterSet {
    type Error = Error;

    fn try_from(raw: RawSpamParameterSet) -> Result<Self> {
        SpamParameterSet::new(raw.method, raw.states, raw.measurements, raw.noise, raw.evolution)
    }
}

impl SpamParameterSet {
    pub fn new(
        method: Method,
        states: Vec<StateParams>,
        measurements: Vec<MeasurementParams>,
        noise: ZMeasurementNoise,
        evolution: Option<EvolutionParams>,
    ) -> Result<Self> {
        if states.len() != method.n_states() {
            return Err(Error::Structure {
                detail: format!(
                    "method {method} takes {} states, got {}",
                    method.n_states(),
                    states.len()
                ),
            });
        }
        if measurements.len() != method.n_measurements() {
            return Err(Error::Structure {
                detail: format!(
                    "method {method} takes {} measurements, got {}",
                    method.n_measurements(),
                    measurements.len()
                ),
            });
        }
        if !matches!(states[0], StateParams::FixedPlusZ) {
            return Err(Error::Structure { detail: "state 0 must be FixedPlusZ".into() });
        }
        if !matches!(states[1], StateParams::PlanarX { .. }) {
            return Err(Error::Structure { detail: "state 1 must be PlanarX".into() });
        }
        for (k, s) in states.iter().enumerate().skip(2) {
            if !matches!(s, StateParams::General { .. }) {
                return Err(Error::Structure { detail: format!("state {k} must be General") });
            }
        }
        if !matches!(measurements[0], MeasurementParams::FixedPlusZ) {
            return Err(Error::Structure { detail: "measurement 0 must be FixedPlusZ".into() });
        }
        for (k, m) in measurements.iter().enumerate().skip(1) {
            if !matches!(m, MeasurementParams::General { .. }) {
                return Err(Error::Structure { detail: format!("measurement {k} must be General") });
            }
        }
        if method.has_evolution() != evolution.is_some() {
            return Err(Error::Structure {
                detail: format!(
                    "method {method} {} evolution parameters",
                    if method.has_evolution() { "requires" } else { "does not take" }
                ),
            });
        }
        if !states.iter().all(StateParams::is_finite)
            || !measurements.iter().all(MeasurementParams::is_finite)
            || !noise.eps0.is_finite()
            || !noise.eps1.is_finite()
        {
            return Err(Error::NonFinite);
        }
        if method == Method::A {
            check_method_a_constraints(&states, &measurements)?;
        }
        Ok(SpamParameterSet { method, states, measurements, noise, evolution })
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn states(&self) -> &[StateParams] {
        &self.states
    }

    pub fn measurements(&self) -> &[MeasurementParams] {
        &self.measurements
    }

    pub fn noise(&self) -> &ZMeasurementNoise {
        &self.noise
    }

    pub fn evolution(&self) -> Option<&EvolutionParams> {
        self.evolution.as_ref()
    }
}

/// Method A pins ‖r⁽²⁾‖ = 1 (pure planar state) and, for each non-reference
/// measurement, ‖R‖ = 1, with R⁽²⁾ additionally in the x-z plane.
fn check_method_a_constraints(
    states: &[StateParams],
    measurements: &[MeasurementParams],
) -> Result<()> {
    let r2 = states[1].bloch();
    if (r2.norm() - 1.0).abs() > CONSTRAINT_TOL {
        return Err(Error::Structure {
            detail: format!("method A state 1 must be pure, got norm {:.9}", r2.norm()),
        });
    }
    for (k, m) in measurements.iter().enumerate().skip(1) {
        let dir = m.direction();
        if (dir.norm() - 1.0).abs() > CONSTRAINT_TOL {
            return Err(Error::Structure {
                detail: format!(
                    "method A measurement {k} must have unit norm, got {:.9}",
                    dir.norm()
                ),
            });
        }
    }
    let m1 = measurements[1].direction();
    if m1.y.abs() > CONSTRAINT_TOL {
        return Err(Error::Structure {
            detail: format!("method A measurement 1 must lie in the x-z plane, got R_y = {:.3e}", m1.y),
        });
    }
    Ok(())
}
