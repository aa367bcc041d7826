#![allow(dead_code)]

use nalgebra::{Matrix2, Matrix4, Vector2};
use qubit_core::pauli::{c, sigma_x, sigma_y, sigma_z};
use qubit_core::{BlochVector, DensityMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

pub fn random_bloch_in_ball(rng: &mut ChaCha12Rng) -> BlochVector {
    loop {
        let v = BlochVector::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        if v.norm() <= 1.0 {
            return v;
        }
    }
}

pub fn random_unit(rng: &mut ChaCha12Rng) -> BlochVector {
    loop {
        let v = random_bloch_in_ball(rng);
        if v.norm() > 1e-3 {
            return v.normalized().unwrap();
        }
    }
}

pub fn random_density(rng: &mut ChaCha12Rng) -> DensityMatrix {
    DensityMatrix::from_bloch(&random_bloch_in_ball(rng)).unwrap()
}

pub fn random_ket(rng: &mut ChaCha12Rng) -> Vector2<C64> {
    loop {
        let v = Vector2::new(
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
        );
        let n = v.norm();
        if n > 1e-3 {
            return v / c(n, 0.0);
        }
    }
}

/// Exactly unitary: U = cos(θ/2) I − i sin(θ/2) n·σ for random axis/angle.
pub fn random_unitary(rng: &mut ChaCha12Rng) -> Matrix2<C64> {
    let n = random_unit(rng);
    let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let (s, co) = (0.5 * theta).sin_cos();
    let sigma_n = sigma_x() * c(n.x, 0.0) + sigma_y() * c(n.y, 0.0) + sigma_z() * c(n.z, 0.0);
    Matrix2::identity() * c(co, 0.0) + sigma_n * c(0.0, -s)
}

pub fn random_hermitian4(rng: &mut ChaCha12Rng) -> Matrix4<C64> {
    let mut a = Matrix4::zeros();
    for r in 0..4 {
        for col in 0..4 {
            a[(r, col)] = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
    }
    (a + a.adjoint()) * c(0.5, 0.0)
}

pub fn max_abs_diff2(a: &Matrix2<C64>, b: &Matrix2<C64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff4(a: &Matrix4<C64>, b: &Matrix4<C64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
