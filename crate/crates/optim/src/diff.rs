use nalgebra::{DMatrix, DVector};

/// Forward-difference Jacobian of a residual vector, one evaluation per
/// coordinate. `fx` must be the residual at `x`. Step per coordinate is
/// `step * (1 + |x_j|)`.
pub fn forward_jacobian<F>(f: &mut F, x: &DVector<f64>, fx: &DVector<f64>, step: f64) -> DMatrix<f64>
where
    F: FnMut(&DVector<f64>) -> DVector<f64>,
{
    let mut jac = DMatrix::zeros(fx.len(), x.len());
    let mut xp = x.clone();
    for j in 0..x.len() {
        let h = step * (1.0 + x[j].abs());
        xp[j] = x[j] + h;
        let fp = f(&xp);
        xp[j] = x[j];
        for i in 0..fx.len() {
            jac[(i, j)] = (fp[i] - fx[i]) / h;
        }
    }
    jac
}

/// Central-difference gradient of a scalar function (two evaluations per
/// coordinate).
pub fn central_gradient<F>(f: &mut F, x: &DVector<f64>, step: f64) -> DVector<f64>
where
    F: FnMut(&DVector<f64>) -> f64,
{
    let mut g = DVector::zeros(x.len());
    let mut xp = x.clone();
    for j in 0..x.len() {
        let h = step * (1.0 + x[j].abs());
        xp[j] = x[j] + h;
        let fp = f(&xp);
        xp[j] = x[j] - h;
        let fm = f(&xp);
        xp[j] = x[j];
        g[j] = (fp - fm) / (2.0 * h);
    }
    g
}
