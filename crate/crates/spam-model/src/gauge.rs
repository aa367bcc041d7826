//! In-plane reparametrizations that leave predicted data unchanged.
//!
//! Every probability produced by a SPAM set has the form
//! p = e₀ + s·M⁽ʲ⁾·r⁽ⁱ⁾, and the pinned elements (the ẑ state, the ẑ
//! measurement, shared ε) fix only the z components. The free x-y
//! coordinates enter through the pairings M_xy·r_xy alone, so any
//! invertible B = [[b_xx, b_xy], [0, b_yy]] acting as
//!
//! r_xy ↦ B r_xy (states),  M_xy ↦ B⁻ᵀ M_xy (measurements)
//!
//! leaves all of them unchanged: (B⁻ᵀM)·(Br) = M·r. The upper-triangular
//! form keeps the planar state planar, and a positive diagonal stays on the
//! identity component (sign flips are discrete relabelings, not covered
//! here). The consequences per method:
//!
//! * 25-parameter static sets: the full three-parameter group acts, so fits
//!   are identified only up to a transform of this family;
//! * 18-parameter evolving sets: free z-axis rotation commutes with the
//!   isotropic subgroup b_xx = b_yy, b_xy = 0 only, leaving one flat
//!   direction;
//! * 12-parameter constrained sets: the unit-norm/planarity constraints
//!   admit nothing but the identity, so the model is fully identified.
//!
//! Parameter-space comparisons between two sets of the same method are
//! therefore meaningful only after optimizing the transform that maps one
//! onto the other; [`GaugeTransform::apply`] supplies the group action that
//! alignment routines need.

use crate::error::{Error, Result};
use crate::types::{MeasurementParams, Method, SpamParameterSet, StateParams};

/// One member of the invariance family: the matrix
/// [[scale_x, shear], [0, scale_y]] applied to state x-y components, with
/// its inverse transpose applied to measurement x-y components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeTransform {
    pub scale_x: f64,
    pub shear: f64,
    pub scale_y: f64,
}

impl GaugeTransform {
    pub fn identity() -> Self {
        GaugeTransform { scale_x: 1.0, shear: 0.0, scale_y: 1.0 }
    }

    /// The isotropic member with both scales equal to `s`, the only kind
    /// that survives free z-axis evolution.
    pub fn scaling(s: f64) -> Self {
        GaugeTransform { scale_x: s, shear: 0.0, scale_y: s }
    }

    pub fn is_isotropic(&self) -> bool {
        self.shear == 0.0 && self.scale_x == self.scale_y
    }

    pub fn inverse(&self) -> Self {
        GaugeTransform {
            scale_x: 1.0 / self.scale_x,
            shear: -self.shear / (self.scale_x * self.scale_y),
            scale_y: 1.0 / self.scale_y,
        }
    }

    /// Largest absolute deviation of the matrix entries from the identity;
    /// a size measure for reporting how far apart two gauges sit.
    pub fn deviation(&self) -> f64 {
        (self.scale_x - 1.0).abs().max(self.shear.abs()).max((self.scale_y - 1.0).abs())
    }

    /// Transforms every free in-plane coordinate of `set`, leaving its
    /// predicted data unchanged. Fails for the 12-parameter method (only the
    /// identity respects its constraints) and for anisotropic transforms of
    /// an evolving set.
    pub fn apply(&self, set: &SpamParameterSet) -> Result<SpamParameterSet> {
        if !(self.scale_x.is_finite() && self.shear.is_finite() && self.scale_y.is_finite())
            || self.scale_x <= 0.0
            || self.scale_y <= 0.0
        {
            return Err(Error::Structure {
                detail: format!(
                    "gauge transform ({:.3e}, {:.3e}, {:.3e}) must have finite entries and a positive diagonal",
                    self.scale_x, self.shear, self.scale_y
                ),
            });
        }
        match set.method() {
            Method::A => {
                return Err(Error::MethodMismatch { op: "gauge transform", method: Method::A })
            }
            Method::B if !self.is_isotropic() => {
                return Err(Error::MethodMismatch {
                    op: "anisotropic gauge transform",
                    method: Method::B,
                })
            }
            _ => {}
        }
        let inv_shear = -self.shear / (self.scale_x * self.scale_y);
        let states = set
            .states()
            .iter()
            .map(|s| match *s {
                StateParams::FixedPlusZ => StateParams::FixedPlusZ,
                StateParams::PlanarX { rx, rz } => {
                    StateParams::PlanarX { rx: self.scale_x * rx, rz }
                }
                StateParams::General { rx, ry, rz } => StateParams::General {
                    rx: self.scale_x * rx + self.shear * ry,
                    ry: self.scale_y * ry,
                    rz,
                },
            })
            .collect();
        let measurements = set
            .measurements()
            .iter()
            .map(|m| match *m {
                MeasurementParams::FixedPlusZ => MeasurementParams::FixedPlusZ,
                MeasurementParams::General { rx, ry, rz } => MeasurementParams::General {
                    rx: rx / self.scale_x,
                    ry: inv_shear * rx + ry / self.scale_y,
                    rz,
                },
            })
            .collect();
        SpamParameterSet::new(
            set.method(),
            states,
            measurements,
            *set.noise(),
            set.evolution().copied(),
        )
    }
}
