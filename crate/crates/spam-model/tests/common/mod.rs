#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use spam_model::{unpack, Method, SpamParameterSet};

pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Uniform point in the Bloch ball of the given radius, by rejection.
pub fn ball_point(rng: &mut ChaCha12Rng, radius: f64) -> [f64; 3] {
    loop {
        let v = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        let n2: f64 = v.iter().map(|x| x * x).sum();
        if n2 <= 1.0 {
            return v.map(|x| x * radius);
        }
    }
}

/// Random packed vector describing a strictly physical set of the given
/// method: in-ball directions (or random angles where the layout stores
/// angles), modest readout noise, and for the evolving method a rate near 1
/// and a decay time near 100.
pub fn random_packed(method: Method, rng: &mut ChaCha12Rng) -> Vec<f64> {
    let mut x = Vec::with_capacity(method.n_parameters());
    match method {
        Method::A => {
            x.push(rng.random_range(-std::f64::consts::PI..std::f64::consts::PI));
            x.extend_from_slice(&ball_point(rng, 0.95));
            x.extend_from_slice(&ball_point(rng, 0.95));
            x.push(rng.random_range(0.0..0.2));
            x.push(rng.random_range(0.0..0.2));
            x.push(rng.random_range(-std::f64::consts::PI..std::f64::consts::PI));
            x.push(rng.random_range(0.0..std::f64::consts::PI));
            x.push(rng.random_range(-std::f64::consts::PI..std::f64::consts::PI));
        }
        Method::B | Method::C => {
            let planar_norm = rng.random_range(0.5..0.98);
            let planar_angle = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
            x.push(planar_norm * planar_angle.sin());
            x.push(planar_norm * planar_angle.cos());
            let n_general_states = method.n_states() - 2;
            for _ in 0..n_general_states {
                x.extend_from_slice(&ball_point(rng, 0.95));
            }
            x.push(rng.random_range(0.0..0.2));
            x.push(rng.random_range(0.0..0.2));
            for _ in 0..method.n_measurements() - 1 {
                x.extend_from_slice(&ball_point(rng, 0.95));
            }
            if method.has_evolution() {
                x.push(rng.random_range(0.5..1.5));
                x.push(rng.random_range(50.0..150.0));
            }
        }
    }
    assert_eq!(x.len(), method.n_parameters());
    x
}

pub fn random_set(method: Method, rng: &mut ChaCha12Rng) -> SpamParameterSet {
    unpack(method, &random_packed(method, rng)).expect("random packed vector is valid")
}

/// Central-difference Jacobian of `f` at `x`, one column per parameter,
/// with per-coordinate steps scaled by 1 + |xⱼ|.
pub fn central_jacobian<F>(mut f: F, x: &[f64], step: f64) -> nalgebra::DMatrix<f64>
where
    F: FnMut(&[f64]) -> Vec<f64>,
{
    let n_out = f(x).len();
    let mut jac = nalgebra::DMatrix::zeros(n_out, x.len());
    let mut probe = x.to_vec();
    for j in 0..x.len() {
        let h = step * (1.0 + x[j].abs());
        probe[j] = x[j] + h;
        let fp = f(&probe);
        probe[j] = x[j] - h;
        let fm = f(&probe);
        probe[j] = x[j];
        for i in 0..n_out {
            jac[(i, j)] = (fp[i] - fm[i]) / (2.0 * h);
        }
    }
    jac
}
