#![allow(dead_code)]

use nalgebra::{Matrix2, Matrix4, Vector4};
use qubit_core::pauli::c;
use qubit_core::{
    apply_choi, born_probability, linalg, BlochVector, ChoiState, DensityMatrix, Effect, C64,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Binomial, Distribution, StandardNormal};

pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

pub fn gaussian(r: &mut ChaCha12Rng) -> f64 {
    StandardNormal.sample(r)
}

pub fn random_ket4(r: &mut ChaCha12Rng) -> Vector4<C64> {
    let mut v = Vector4::zeros();
    for k in 0..4 {
        v[k] = c(gaussian(r), gaussian(r));
    }
    let n = v.norm();
    v / c(n, 0.0)
}

fn partial_trace_b_raw(m: &Matrix4<C64>) -> Matrix2<C64> {
    let mut out = Matrix2::zeros();
    for a in 0..2 {
        for a2 in 0..2 {
            out[(a, a2)] = m[(2 * a, 2 * a2)] + m[(2 * a + 1, 2 * a2 + 1)];
        }
    }
    out
}

fn inv_sqrt2(a: &Matrix2<C64>) -> Matrix2<C64> {
    let eig = nalgebra::SymmetricEigen::new(*a);
    let mut out = Matrix2::zeros();
    for k in 0..2 {
        let col = eig.eigenvectors.column(k);
        out += col * col.adjoint() * c(1.0 / eig.eigenvalues[k].sqrt(), 0.0);
    }
    out
}

/// Random completely positive trace-preserving Choi state: a Wishart draw
/// whose reduced A-system is renormalized to I/2.
pub fn random_cptp_choi(r: &mut ChaCha12Rng) -> ChoiState {
    let mut g = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            g[(i, j)] = c(gaussian(r), gaussian(r));
        }
    }
    let m = g.adjoint() * g;
    let a = partial_trace_b_raw(&m) + Matrix2::identity() * c(1e-12, 0.0);
    let s = inv_sqrt2(&a);
    let s4 = s.kronecker(&Matrix2::identity());
    let rho = s4 * m * s4.adjoint() * c(0.5, 0.0);
    ChoiState::new(linalg::hermitize4(&rho)).unwrap()
}

/// Traceless rank-one perturbation made trace-preserving:
/// P' = (vv† − I/4) − Tr_B(vv† − I/4) ⊗ I/2.
pub fn tp_dip(r: &mut ChaCha12Rng) -> Matrix4<C64> {
    let v = random_ket4(r);
    let p = v * v.adjoint() - Matrix4::identity() * c(0.25, 0.0);
    let tb = partial_trace_b_raw(&p);
    let corr = tb.kronecker(&(Matrix2::identity() * c(0.5, 0.0)));
    linalg::hermitize4(&(p - corr))
}

/// Trace-preserving but non-positive Choi state with a clearly negative
/// eigenvalue (below −dip/20).
pub fn tp_unphysical(r: &mut ChaCha12Rng, dip: f64) -> ChoiState {
    loop {
        let base = random_cptp_choi(r);
        let cand = ChoiState::new(base.matrix() + tp_dip(r) * c(dip, 0.0)).unwrap();
        if cand.min_eigenvalue() < -dip / 20.0 {
            return cand;
        }
    }
}

/// Four axis preparations: +z, +x, +y, −z.
pub fn axis_states() -> Vec<DensityMatrix> {
    [(0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, -1.0)]
        .iter()
        .map(|&(x, y, z)| DensityMatrix::from_bloch(&BlochVector::new(x, y, z)).unwrap())
        .collect()
}

/// Three ideal axis projectors ½(I + σ_k).
pub fn axis_effects() -> Vec<Effect> {
    [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)]
        .iter()
        .map(|&(x, y, z)| {
            Effect::from_components(0.5, &BlochVector::new(0.5 * x, 0.5 * y, 0.5 * z)).unwrap()
        })
        .collect()
}

/// Row-major cell probabilities Tr(E_j 𝓔(ρ_i)).
pub fn cell_probabilities(
    choi: &ChoiState,
    states: &[DensityMatrix],
    effects: &[Effect],
) -> Vec<f64> {
    let mut p = Vec::new();
    for rho in states {
        let out = apply_choi(choi, rho);
        for e in effects {
            p.push(born_probability(&out, e));
        }
    }
    p
}

/// Binomial frequencies for each cell at `shots` per cell.
pub fn sampled_frequencies(probabilities: &[f64], shots: u64, r: &mut ChaCha12Rng) -> Vec<f64> {
    probabilities
        .iter()
        .map(|&p| Binomial::new(shots, p.clamp(0.0, 1.0)).unwrap().sample(r) as f64 / shots as f64)
        .collect()
}

/// Trace distance ½‖a − b‖₁ between two Choi states.
pub fn trace_distance(a: &ChoiState, b: &ChoiState) -> f64 {
    let diff = a.matrix() - b.matrix();
    0.5 * linalg::eigenvalues4(&linalg::hermitize4(&diff)).iter().map(|v| v.abs()).sum::<f64>()
}

/// Frobenius distance between two Choi states.
pub fn frobenius_distance(a: &ChoiState, b: &ChoiState) -> f64 {
    (a.matrix() - b.matrix()).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
