//! Multi-start maximum-likelihood fitting.
//!
//! Each restart runs a damped least-squares (Levenberg-Marquardt) descent
//! on the packed parameter vector with numerically estimated Jacobians.
//! The search is unconstrained but physicality is kept by hinge penalty
//! residuals on Bloch norms and readout noise: they vanish identically on
//! the physical region and grow heavily outside it. This matters where the
//! model carries flat reparametrization directions, because a penalty-free
//! search can drift along them to an unphysical representative that no
//! after-the-fact projection can repair without leaving the optimum.
//! Vectors that cannot be unpacked at all (non-finite entries,
//! inadmissible evolution parameters) are repelled by a large constant
//! residual. The best restart's endpoint is projected onto the physical
//! region (a no-op beyond rounding when the penalties are inactive) and
//! the objective is re-evaluated there, so the reported value always
//! belongs to the returned estimate and never includes penalty terms.

use data_sim::{CountDataset, DatasetLayout};
use nalgebra::DVector;
use optim::{levenberg_marquardt, LmConfig};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use spam_model::{project_physical, unpack, GaugeTransform, Method, SpamParameterSet};

use crate::error::{Error, Result};
use crate::init::{initial_points, InitStrategy};
use crate::objective::{clamped_frequency, nll, WeightConvention};

/// Residual value signalling an un-evaluable parameter vector.
const BARRIER: f64 = 1e6;

/// Readout noise above this hinge cap is penalized; kept a shade under the
/// projection clamp so an endpoint resting on the hinge still projects to
/// itself.
const EPS_CAP: f64 = 0.5 - 1e-9;

/// Two restarts whose objectives differ by less than this are considered
/// tied and resolved toward the lower initial point id.
const TIE_TOL: f64 = 1e-10;

/// Search effort limits. The evaluation budget applies to each restart
/// separately and counts residual-vector evaluations, Jacobian columns
/// included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerBudget {
    pub max_evaluations: usize,
    pub n_restarts: usize,
    /// Relative objective decrease below which a restart declares
    /// convergence.
    pub tolerance: f64,
}

impl Default for OptimizerBudget {
    fn default() -> Self {
        OptimizerBudget { max_evaluations: 20_000, n_restarts: 8, tolerance: 1e-12 }
    }
}

impl OptimizerBudget {
    /// Per-method restart defaults: the static methods are restarted 8
    /// times against local minima; the evolving method's objective is
    /// reliably single-basin and runs once.
    pub fn default_for(method: Method) -> Self {
        let n_restarts = match method {
            Method::A | Method::C => 8,
            Method::B => 1,
        };
        OptimizerBudget { n_restarts, ..OptimizerBudget::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.max_evaluations == 0 || self.n_restarts == 0 {
            return Err(Error::BadBudget {
                detail: "evaluation and restart counts must be positive".into(),
            });
        }
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return Err(Error::BadBudget {
                detail: format!("tolerance must be positive and finite, got {}", self.tolerance),
            });
        }
        Ok(())
    }
}

/// Outcome of a multi-start fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    /// Best physical parameter set found.
    pub estimate: SpamParameterSet,
    /// Objective evaluated at `estimate`.
    pub objective_value: f64,
    /// Whether the winning restart met a convergence criterion.
    pub converged: bool,
    /// Residual evaluations summed over all restarts.
    pub n_evaluations: usize,
    /// Which initial point produced the estimate.
    pub initial_point_id: usize,
}

/// Per-cell (observed frequency, √weight) pairs in the flat order the
/// residual vector uses, plus the physicality hinge bookkeeping.
struct CellData {
    freqs: Vec<f64>,
    sqrt_weights: Vec<f64>,
    times: Vec<f64>,
    n_states: usize,
    n_measurements: usize,
    /// Hinge residual coefficient, sized to dominate the data curvature.
    penalty_scale: f64,
}

impl CellData {
    fn prepare(data: &CountDataset, convention: WeightConvention) -> CellData {
        let n_times = data.n_times();
        let mut freqs = Vec::with_capacity(data.n_states() * data.n_measurements() * n_times);
        let mut sqrt_weights = Vec::with_capacity(freqs.capacity());
        let mut weights = Vec::with_capacity(freqs.capacity());
        for i in 0..data.n_states() {
            for j in 0..data.n_measurements() {
                for k in 0..n_times {
                    freqs.push(data.frequency(i, j, k));
                    let p_hat = clamped_frequency(data, i, j, k);
                    let w = convention.weight(p_hat, data.shots());
                    weights.push(w);
                    sqrt_weights.push(w.sqrt());
                }
            }
        }
        // Size the hinge from the median cell weight: strong enough to
        // dominate typical data curvature, but not so stiff (as a sum
        // inflated by near-degenerate cells would be) that the solver
        // cannot negotiate the boundary.
        weights.sort_by(|a, b| a.total_cmp(b));
        let median_w = weights[weights.len() / 2];
        let penalty_scale = 10.0 * (weights.len() as f64 * median_w).sqrt().max(1.0);
        CellData {
            freqs,
            sqrt_weights,
            times: data.times().to_vec(),
            n_states: data.n_states(),
            n_measurements: data.n_measurements(),
            penalty_scale,
        }
    }

    /// One hinge row per free-norm vector plus four for the noise bounds.
    fn n_penalties(&self) -> usize {
        (self.n_states - 1) + (self.n_measurements - 1) + 4
    }

    /// Weighted residual vector at a packed point, hinge rows appended; a
    /// constant barrier when the vector does not describe parameters at all.
    fn residuals(&self, method: Method, x: &DVector<f64>) -> DVector<f64> {
        let n = self.freqs.len() + self.n_penalties();
        let params = match unpack(method, x.as_slice()) {
            Ok(p) => p,
            Err(_) => return DVector::from_element(n, BARRIER),
        };
        let tables = match method {
            Method::A | Method::C => vec![spam_model::probability_table(&params)],
            Method::B => match spam_model::predict_timeseries(&params, &self.times) {
                Ok(t) => t,
                Err(_) => return DVector::from_element(n, BARRIER),
            },
        };
        let n_times = tables.len();
        let mut r = DVector::zeros(n);
        let mut c = 0;
        for i in 0..self.n_states {
            for j in 0..self.n_measurements {
                for table in tables.iter().take(n_times) {
                    r[c] = self.sqrt_weights[c] * (table[(i, j)] - self.freqs[c]);
                    c += 1;
                }
            }
        }
        // Hinges are identically zero on the physical region, so they bend
        // nothing inside it; outside, they pull back in. Along any flat
        // reparametrization direction the data term cannot resist, so the
        // search settles on an in-ball representative.
        for s in &params.states()[1..] {
            r[c] = self.penalty_scale * (s.bloch().norm() - 1.0).max(0.0);
            c += 1;
        }
        for m in &params.measurements()[1..] {
            r[c] = self.penalty_scale * (m.direction().norm() - 1.0).max(0.0);
            c += 1;
        }
        let noise = params.noise();
        r[c] = self.penalty_scale * (-noise.eps0).max(0.0);
        r[c + 1] = self.penalty_scale * (noise.eps0 - EPS_CAP).max(0.0);
        r[c + 2] = self.penalty_scale * (-noise.eps1).max(0.0);
        r[c + 3] = self.penalty_scale * (noise.eps1 - EPS_CAP).max(0.0);
        r
    }
}

/// Minimal isotropic reparametrization bringing an out-of-ball endpoint
/// back inside without changing its predictions. States scale by `s` and
/// measurements by `1/s` in the x-y plane, so a vector with planar part ρ
/// and axial part z stays in the ball iff s²ρ² + z² ≤ 1; the step picks the
/// feasible `s` closest to 1. Identity when the point is already physical,
/// when no such `s` exists, or for the constrained method (which has no
/// flat directions to slide along).
fn center_on_orbit(params: &SpamParameterSet) -> SpamParameterSet {
    if params.method() == Method::A {
        return params.clone();
    }
    let in_ball = params.states().iter().all(|s| s.bloch().norm() <= 1.0)
        && params.measurements().iter().all(|m| m.direction().norm() <= 1.0);
    if in_ball {
        return params.clone();
    }
    // s must stay below every state's cap and above every measurement's
    // floor.
    let mut s_max = f64::INFINITY;
    for st in &params.states()[1..] {
        let r = st.bloch();
        let planar = r.x.hypot(r.y);
        if r.z.abs() > 1.0 {
            return params.clone();
        }
        if planar > 0.0 {
            s_max = s_max.min((1.0 - r.z * r.z).sqrt() / planar);
        }
    }
    let mut s_min = 0.0f64;
    for m in &params.measurements()[1..] {
        let d = m.direction();
        let planar = d.x.hypot(d.y);
        if d.z.abs() > 1.0 {
            return params.clone();
        }
        if planar > 0.0 {
            s_min = s_min.max(planar / (1.0 - d.z * d.z).sqrt());
        }
    }
    if s_min > s_max || s_max <= 0.0 {
        return params.clone();
    }
    let s = 1.0f64.clamp(s_min, s_max);
    GaugeTransform::scaling(s).apply(params).unwrap_or_else(|_| params.clone())
}

fn check_layout(method: Method, data: &CountDataset) -> Result<()> {
    let want = match method {
        Method::A | Method::C => DatasetLayout::Static,
        Method::B => DatasetLayout::Timeseries,
    };
    if data.layout() != want {
        return Err(Error::ShapeMismatch {
            detail: format!("method {method} fits {want:?} data, got {:?}", data.layout()),
        });
    }
    if data.n_states() != method.n_states() || data.n_measurements() != method.n_measurements() {
        return Err(Error::ShapeMismatch {
            detail: format!(
                "method {method} fits a {}x{} table, data hold {}x{}",
                method.n_states(),
                method.n_measurements(),
                data.n_states(),
                data.n_measurements()
            ),
        });
    }
    Ok(())
}

/// Fits the chosen model to count data by weighted least squares from
/// `n_restarts` initial points. Deterministic given identical inputs and
/// seed; restarts tie-break toward the lowest initial point id.
pub fn fit(
    method: Method,
    data: &CountDataset,
    budget: &OptimizerBudget,
    init: &InitStrategy,
    convention: WeightConvention,
    seed: u64,
) -> Result<FitResult> {
    budget.validate()?;
    check_layout(method, data)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let starts = initial_points(method, init, budget.n_restarts, &mut rng)?;
    let cells = CellData::prepare(data, convention);
    let lm_cfg = LmConfig {
        max_evaluations: budget.max_evaluations,
        ftol: budget.tolerance,
        ..LmConfig::default()
    };

    let mut best: Option<FitResult> = None;
    let mut total_evaluations = 0usize;
    for (id, start) in starts.iter().enumerate() {
        let x0 = DVector::from_column_slice(start);
        let run = levenberg_marquardt(|x| cells.residuals(method, x), &x0, &lm_cfg);
        total_evaluations += run.n_evaluations;
        let estimate = match unpack(method, run.x.as_slice()) {
            Ok(p) => project_physical(&center_on_orbit(&p)),
            // An endpoint that cannot be unpacked means the start never
            // left the barrier; skip it.
            Err(_) => continue,
        };
        let objective_value = nll(&estimate, data, convention)?;
        let candidate = FitResult {
            estimate,
            objective_value,
            converged: run.converged,
            n_evaluations: 0,
            initial_point_id: id,
        };
        let replace = match &best {
            None => true,
            Some(b) => objective_value < b.objective_value - TIE_TOL,
        };
        if replace {
            best = Some(candidate);
        }
    }
    let mut result = best.ok_or_else(|| Error::BadInit {
        detail: "no initial point produced an evaluable endpoint".into(),
    })?;
    result.n_evaluations = total_evaluations;
    Ok(result)
}
