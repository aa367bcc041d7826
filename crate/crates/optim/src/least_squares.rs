//! Levenberg-Marquardt minimization of ‖f(x)‖² with numerically estimated
//! Jacobians and multiplicative damping on the scaled normal equations.

use nalgebra::{DMatrix, DVector};

use crate::diff::forward_jacobian;

#[derive(Debug, Clone)]
pub struct LmConfig {
    /// Budget counted in residual-vector evaluations, Jacobian columns
    /// included.
    pub max_evaluations: usize,
    /// Stop when an accepted step reduces the objective by less than
    /// `ftol * objective`.
    pub ftol: f64,
    /// Stop when an accepted step moves x by less than `xtol * (1 + ‖x‖)`.
    pub xtol: f64,
    /// Stop when the gradient infinity-norm falls below `gtol`.
    pub gtol: f64,
    /// Initial damping factor.
    pub lambda_init: f64,
    /// Damping is multiplied by this on rejection, divided on acceptance.
    pub lambda_step: f64,
    /// Relative forward-difference step for the Jacobian.
    pub jacobian_step: f64,
}

impl Default for LmConfig {
    fn default() -> Self {
        LmConfig {
            max_evaluations: 20_000,
            ftol: 1e-12,
            xtol: 1e-12,
            gtol: 1e-9,
            lambda_init: 1e-3,
            lambda_step: 10.0,
            jacobian_step: 1e-7,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LmResult {
    pub x: DVector<f64>,
    /// Sum of squared residuals at `x`.
    pub objective: f64,
    pub n_evaluations: usize,
    pub n_iterations: usize,
    /// True when an ftol/xtol/gtol criterion fired, false when the evaluation
    /// budget ran out or the damping blew up without reaching one.
    pub converged: bool,
}

const LAMBDA_MAX: f64 = 1e12;
const LAMBDA_MIN: f64 = 1e-12;

pub fn levenberg_marquardt<F>(mut f: F, x0: &DVector<f64>, cfg: &LmConfig) -> LmResult
where
    F: FnMut(&DVector<f64>) -> DVector<f64>,
{
    let mut x = x0.clone();
    let mut r = f(&x);
    let mut s = r.norm_squared();
    let mut evals = 1usize;
    let mut lambda = cfg.lambda_init;
    let mut iterations = 0usize;
    let mut converged = false;

    'outer: while evals + x.len() < cfg.max_evaluations {
        iterations += 1;
        let jac = forward_jacobian(&mut f, &x, &r, cfg.jacobian_step);
        evals += x.len();
        let grad = jac.transpose() * &r;
        if grad.amax() <= 0.5 * cfg.gtol {
            converged = true;
            break;
        }
        let jtj = jac.transpose() * &jac;

        // inner loop: raise damping until a step is accepted
        loop {
            let mut damped = jtj.clone();
            for k in 0..damped.nrows() {
                // Marquardt scaling with an absolute floor so that flat
                // coordinates still receive finite damping
                damped[(k, k)] += lambda * jtj[(k, k)].max(1e-12);
            }
            let step = solve_spd(&damped, &(-&grad));
            let accepted = match step {
                Some(delta) => {
                    let x_new = &x + &delta;
                    let r_new = f(&x_new);
                    evals += 1;
                    let s_new = r_new.norm_squared();
                    if s_new.is_finite() && s_new < s {
                        let decrease = s - s_new;
                        let step_size = delta.norm();
                        x = x_new;
                        r = r_new;
                        s = s_new;
                        lambda = (lambda / cfg.lambda_step).max(LAMBDA_MIN);
                        if decrease <= cfg.ftol * s.max(1e-300)
                            || step_size <= cfg.xtol * (1.0 + x.norm())
                        {
                            converged = true;
                            break 'outer;
                        }
                        true
                    } else {
                        false
                    }
                }
                None => false,
            };
            if accepted {
                break;
            }
            lambda *= cfg.lambda_step;
            if lambda > LAMBDA_MAX {
                // stalled: no descent direction left at machine resolution
                converged = grad.amax() <= cfg.gtol * (1.0 + s);
                break 'outer;
            }
            if evals >= cfg.max_evaluations {
                break 'outer;
            }
        }
    }

    LmResult { x, objective: s, n_evaluations: evals, n_iterations: iterations, converged }
}

fn solve_spd(a: &DMatrix<f64>, b: &DVector<f64>) -> Option<DVector<f64>> {
    a.clone().cholesky().map(|ch| ch.solve(b))
}
