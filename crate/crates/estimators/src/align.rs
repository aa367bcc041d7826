//! Quotienting fits by the model's invariance family before comparison.
//!
//! Static 25-parameter fits are identified only up to a 3-parameter
//! in-plane transform and evolving 18-parameter fits up to an isotropic
//! scale, so the raw packed-vector distance between an estimate and a
//! reference mixes genuine error with an arbitrary choice the data cannot
//! see. Alignment removes the arbitrary part: it finds the transform of the
//! estimate closest to the reference in packed coordinates and returns the
//! moved estimate, whose residual distance is then meaningful.

use nalgebra::DVector;
use optim::{levenberg_marquardt, LmConfig};
use spam_model::{pack, GaugeTransform, Method, SpamParameterSet};

use crate::error::{Error, Result};

/// Finds the member of the invariance family that brings `estimate` closest
/// to `reference` (least squares over packed coordinates) and returns the
/// transformed estimate with the transform used. The constrained method has
/// no freedom and comes back unchanged; the evolving method optimizes the
/// isotropic scale only.
pub fn gauge_align(
    estimate: &SpamParameterSet,
    reference: &SpamParameterSet,
) -> Result<(SpamParameterSet, GaugeTransform)> {
    if estimate.method() != reference.method() {
        return Err(Error::ShapeMismatch {
            detail: format!(
                "cannot align a method {} estimate with a method {} reference",
                estimate.method(),
                reference.method()
            ),
        });
    }
    let method = estimate.method();
    if method == Method::A {
        return Ok((estimate.clone(), GaugeTransform::identity()));
    }
    let target = DVector::from_vec(pack(reference));
    // Scales live on a log axis so the search stays on the positive cone.
    let n_free = if method == Method::C { 3 } else { 1 };
    let residual = |y: &DVector<f64>| match transform_from(method, y).apply(estimate) {
        Ok(moved) => DVector::from_vec(pack(&moved)) - &target,
        Err(_) => DVector::from_element(target.len(), 1e6),
    };
    let cfg = LmConfig { max_evaluations: 2_000, ..LmConfig::default() };
    let best = levenberg_marquardt(residual, &DVector::zeros(n_free), &cfg);
    let transform = transform_from(method, &best.x);
    Ok((transform.apply(estimate)?, transform))
}

fn transform_from(method: Method, y: &DVector<f64>) -> GaugeTransform {
    match method {
        Method::A => GaugeTransform::identity(),
        Method::B => GaugeTransform::scaling(y[0].exp()),
        Method::C => {
            GaugeTransform { scale_x: y[0].exp(), shear: y[1], scale_y: y[2].exp() }
        }
    }
}
