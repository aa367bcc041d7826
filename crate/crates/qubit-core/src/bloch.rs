use serde::{Deserialize, Serialize};

/// Real 3-vector on (or in) the Bloch sphere.
///
/// Used both for state vectors r with ‖r‖ ≤ 1 (ρ = ½(I + r·σ)) and for unit
/// measurement/rotation axes. Norm constraints are enforced at the points of
/// use, not on the raw vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const X: BlochVector = BlochVector { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: BlochVector = BlochVector { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: BlochVector = BlochVector { x: 0.0, y: 0.0, z: 1.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        BlochVector { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &BlochVector) -> BlochVector {
        BlochVector::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn scaled(&self, s: f64) -> BlochVector {
        BlochVector::new(s * self.x, s * self.y, s * self.z)
    }

    pub fn add(&self, other: &BlochVector) -> BlochVector {
        BlochVector::new(self.x + other.x, self.y + other.y, self.z + other.z)
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn normalized(&self) -> Option<BlochVector> {
        let n = self.norm();
        if n < 1e-300 {
            None
        } else {
            Some(self.scaled(1.0 / n))
        }
    }

    /// Rodrigues rotation by `angle` (radians) about the unit vector `axis`.
    pub fn rotated_about(&self, axis: &BlochVector, angle: f64) -> BlochVector {
        let (s, c) = angle.sin_cos();
        let k_cross = axis.cross(self);
        let k_dot = axis.dot(self);
        self.scaled(c)
            .add(&k_cross.scaled(s))
            .add(&axis.scaled(k_dot * (1.0 - c)))
    }

    /// Angle in radians between the directions of two nonzero vectors.
    pub fn angle_to(&self, other: &BlochVector) -> f64 {
        let nn = self.norm() * other.norm();
        if nn < 1e-300 {
            return f64::NAN;
        }
        (self.dot(other) / nn).clamp(-1.0, 1.0).acos()
    }

    /// An arbitrary unit vector perpendicular to `self` (nonzero input).
    pub fn any_perpendicular(&self) -> BlochVector {
        let trial = if self.x.abs() < 0.9 { BlochVector::X } else { BlochVector::Y };
        self.cross(&trial)
            .normalized()
            .expect("nonzero vector has a perpendicular")
    }
}
