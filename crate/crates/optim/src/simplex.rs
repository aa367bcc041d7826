//! Nelder-Mead simplex search: derivative-free fallback for scalar
//! objectives where the least-squares structure is unavailable or the
//! numerical Jacobian is untrustworthy.

use nalgebra::DVector;

#[derive(Debug, Clone)]
pub struct NmConfig {
    pub max_evaluations: usize,
    /// Stop when the objective spread across the simplex drops below
    /// `ftol * (1 + |f_best|)`.
    pub ftol: f64,
    /// Initial displacement per coordinate, scaled by `1 + |x_j|`.
    pub initial_step: f64,
}

impl Default for NmConfig {
    fn default() -> Self {
        NmConfig { max_evaluations: 50_000, ftol: 1e-12, initial_step: 0.05 }
    }
}

#[derive(Debug, Clone)]
pub struct NmResult {
    pub x: DVector<f64>,
    pub objective: f64,
    pub n_evaluations: usize,
    pub converged: bool,
}

const ALPHA: f64 = 1.0; // reflection
const GAMMA: f64 = 2.0; // expansion
const RHO: f64 = 0.5; // contraction
const SIGMA: f64 = 0.5; // shrink

pub fn nelder_mead<F>(mut f: F, x0: &DVector<f64>, cfg: &NmConfig) -> NmResult
where
    F: FnMut(&DVector<f64>) -> f64,
{
    let n = x0.len();
    let mut evals = 0usize;
    let mut eval = |x: &DVector<f64>, evals: &mut usize| -> f64 {
        *evals += 1;
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            f64::MAX
        }
    };

    let mut simplex: Vec<(DVector<f64>, f64)> = Vec::with_capacity(n + 1);
    let f0 = eval(x0, &mut evals);
    simplex.push((x0.clone(), f0));
    for j in 0..n {
        let mut xj = x0.clone();
        xj[j] += cfg.initial_step * (1.0 + x0[j].abs());
        let fj = eval(&xj, &mut evals);
        simplex.push((xj, fj));
    }

    let mut converged = false;
    while evals < cfg.max_evaluations {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = simplex[n].1 - simplex[0].1;
        if spread <= cfg.ftol * (1.0 + simplex[0].1.abs()) {
            converged = true;
            break;
        }

        // centroid of all but the worst vertex
        let mut centroid = DVector::zeros(n);
        for (x, _) in &simplex[..n] {
            centroid += x;
        }
        centroid /= n as f64;

        let worst = simplex[n].clone();
        let reflected = &centroid + (&centroid - &worst.0) * ALPHA;
        let fr = eval(&reflected, &mut evals);

        if fr < simplex[0].1 {
            let expanded = &centroid + (&centroid - &worst.0) * GAMMA;
            let fe = eval(&expanded, &mut evals);
            simplex[n] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            let contracted = &centroid + (&worst.0 - &centroid) * RHO;
            let fc = eval(&contracted, &mut evals);
            if fc < worst.1 {
                simplex[n] = (contracted, fc);
            } else {
                // shrink toward the best vertex
                let best = simplex[0].0.clone();
                for entry in simplex.iter_mut().skip(1) {
                    entry.0 = &best + (&entry.0 - &best) * SIGMA;
                    entry.1 = eval(&entry.0, &mut evals);
                }
            }
        }
    }

    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    NmResult {
        x: simplex[0].0.clone(),
        objective: simplex[0].1,
        n_evaluations: evals,
        converged,
    }
}
