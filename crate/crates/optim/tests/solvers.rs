use approx::assert_relative_eq;
use nalgebra::{dvector, DVector};
use optim::{
    central_gradient, forward_jacobian, levenberg_marquardt, nelder_mead, LmConfig, NmConfig,
};

/// Residuals of an exponential-decay fit to exact synthetic data; minimum at
/// (a, b) = (2.5, 0.7) with zero residual.
fn decay_residuals(x: &DVector<f64>) -> DVector<f64> {
    let (a, b) = (x[0], x[1]);
    let ts: Vec<f64> = (0..12).map(|k| 0.3 * k as f64).collect();
    DVector::from_iterator(
        ts.len(),
        ts.iter().map(|t| a * (-b * t).exp() - 2.5 * (-0.7 * t).exp()),
    )
}

fn rosenbrock_residuals(x: &DVector<f64>) -> DVector<f64> {
    dvector![1.0 - x[0], 10.0 * (x[1] - x[0] * x[0])]
}

#[test]
fn lm_solves_linear_least_squares() {
    // overdetermined linear system with known normal-equation solution
    let f = |x: &DVector<f64>| -> DVector<f64> {
        dvector![
            x[0] + 2.0 * x[1] - 1.0,
            3.0 * x[0] - x[1] + 2.0,
            x[0] + x[1] - 0.5,
            2.0 * x[0] + x[1] + 1.0
        ]
    };
    let res = levenberg_marquardt(f, &dvector![0.0, 0.0], &LmConfig::default());
    assert!(res.converged);
    // solution of (AᵀA)x = Aᵀb computed by hand for this system
    let a = nalgebra::matrix![1.0, 2.0; 3.0, -1.0; 1.0, 1.0; 2.0, 1.0];
    let b = dvector![1.0, -2.0, 0.5, -1.0];
    let expect = (a.transpose() * a).try_inverse().unwrap() * a.transpose() * b;
    assert_relative_eq!(res.x[0], expect[0], epsilon = 1e-8);
    assert_relative_eq!(res.x[1], expect[1], epsilon = 1e-8);
}

#[test]
fn lm_recovers_decay_parameters() {
    let res = levenberg_marquardt(decay_residuals, &dvector![1.0, 0.2], &LmConfig::default());
    assert!(res.converged);
    assert_relative_eq!(res.x[0], 2.5, epsilon = 1e-7);
    assert_relative_eq!(res.x[1], 0.7, epsilon = 1e-7);
    assert!(res.objective <= 1e-16);
}

#[test]
fn lm_handles_curved_valley() {
    let res = levenberg_marquardt(rosenbrock_residuals, &dvector![-1.2, 1.0], &LmConfig::default());
    assert!(res.converged);
    assert_relative_eq!(res.x[0], 1.0, epsilon = 1e-6);
    assert_relative_eq!(res.x[1], 1.0, epsilon = 1e-6);
}

#[test]
fn lm_respects_evaluation_budget() {
    let cfg = LmConfig { max_evaluations: 8, ..LmConfig::default() };
    let res = levenberg_marquardt(decay_residuals, &dvector![1.0, 0.2], &cfg);
    assert!(!res.converged);
    assert!(res.n_evaluations <= 9);
}

#[test]
fn lm_is_deterministic() {
    let run = || levenberg_marquardt(decay_residuals, &dvector![1.3, 0.4], &LmConfig::default());
    let (a, b) = (run(), run());
    assert_eq!(a.x, b.x);
    assert_eq!(a.objective, b.objective);
    assert_eq!(a.n_evaluations, b.n_evaluations);
}

#[test]
fn nelder_mead_minimizes_quadratic_bowl() {
    let f = |x: &DVector<f64>| (x[0] - 3.0).powi(2) + 2.0 * (x[1] + 1.0).powi(2) + 0.5;
    let res = nelder_mead(f, &dvector![0.0, 0.0], &NmConfig::default());
    assert!(res.converged);
    assert_relative_eq!(res.x[0], 3.0, epsilon = 1e-5);
    assert_relative_eq!(res.x[1], -1.0, epsilon = 1e-5);
    assert_relative_eq!(res.objective, 0.5, epsilon = 1e-9);
}

#[test]
fn nelder_mead_survives_non_finite_regions() {
    // objective undefined left of x = 0; simplex must still find x = 1
    let f = |x: &DVector<f64>| {
        if x[0] < 0.0 {
            f64::NAN
        } else {
            (x[0] - 1.0).powi(2)
        }
    };
    let res = nelder_mead(f, &dvector![0.2], &NmConfig::default());
    assert_relative_eq!(res.x[0], 1.0, epsilon = 1e-5);
}

#[test]
fn finite_differences_match_analytic_derivatives() {
    // residuals (x², xy) with analytic Jacobian [[2x, 0], [y, x]]
    let mut f = |x: &DVector<f64>| dvector![x[0] * x[0], x[0] * x[1]];
    let x = dvector![1.3, -0.7];
    let fx = f(&x);
    let jac = forward_jacobian(&mut f, &x, &fx, 1e-7);
    assert_relative_eq!(jac[(0, 0)], 2.6, epsilon = 1e-5);
    assert_relative_eq!(jac[(0, 1)], 0.0, epsilon = 1e-7);
    assert_relative_eq!(jac[(1, 0)], -0.7, epsilon = 1e-6);
    assert_relative_eq!(jac[(1, 1)], 1.3, epsilon = 1e-6);

    let mut g = |x: &DVector<f64>| x[0].powi(3) - 2.0 * x[0] * x[1];
    let grad = central_gradient(&mut g, &x, 1e-6);
    assert_relative_eq!(grad[0], 3.0 * 1.3 * 1.3 - 2.0 * (-0.7), epsilon = 1e-6);
    assert_relative_eq!(grad[1], -2.0 * 1.3, epsilon = 1e-7);
}
