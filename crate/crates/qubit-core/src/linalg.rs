//! Hermitian matrix helpers shared by states (2×2) and Choi states (4×4):
//! symmetrization, eigenvalue clamping, matrix square roots, and the Uhlmann
//! fidelity F = (Tr √(√ρ σ √ρ))².

use nalgebra::{Matrix2, Matrix4, SymmetricEigen};

use crate::pauli::{c, C64};

macro_rules! hermitian_impls {
    ($mat:ty, $dim:expr, $hermitize:ident, $eigenvalues:ident, $psd_clamp:ident,
     $sqrt_psd:ident, $fidelity:ident) => {
        /// (m + m†)/2, discarding anti-Hermitian numerical drift.
        pub fn $hermitize(m: &$mat) -> $mat {
            (m + m.adjoint()) * c(0.5, 0.0)
        }

        /// Eigenvalues of a Hermitian matrix, ascending.
        pub fn $eigenvalues(m: &$mat) -> [f64; $dim] {
            let eig = SymmetricEigen::new(*m);
            let mut vals = [0.0; $dim];
            for (v, e) in vals.iter_mut().zip(eig.eigenvalues.iter()) {
                *v = *e;
            }
            vals.sort_by(|a, b| a.total_cmp(b));
            vals
        }

        /// Clamp negative eigenvalues to 0; optionally rescale to unit trace.
        pub fn $psd_clamp(m: &$mat, renormalize: bool) -> $mat {
            let eig = SymmetricEigen::new($hermitize(m));
            let mut vals = eig.eigenvalues.map(|v| v.max(0.0));
            if renormalize {
                let tr: f64 = vals.iter().sum();
                if tr > 1e-300 {
                    vals /= tr;
                }
            }
            let mut out = <$mat>::zeros();
            for (k, v) in vals.iter().enumerate() {
                let col = eig.eigenvectors.column(k);
                out += col * col.adjoint() * c(*v, 0.0);
            }
            $hermitize(&out)
        }

        /// Principal square root of a PSD matrix. Eigenvalues below 1e-14 of
        /// the largest count as exact zeros: √ amplifies rounding noise at 0
        /// (√1e-16 = 1e-8) badly enough to wreck rank-deficient inputs
        /// otherwise.
        pub fn $sqrt_psd(m: &$mat) -> $mat {
            let eig = SymmetricEigen::new($hermitize(m));
            let zero_tol = zero_threshold(eig.eigenvalues.iter());
            let mut out = <$mat>::zeros();
            for (k, v) in eig.eigenvalues.iter().enumerate() {
                if *v > zero_tol {
                    let col = eig.eigenvectors.column(k);
                    out += col * col.adjoint() * c(v.sqrt(), 0.0);
                }
            }
            $hermitize(&out)
        }

        /// Uhlmann fidelity between two PSD unit-trace matrices.
        pub fn $fidelity(a: &$mat, b: &$mat) -> f64 {
            let ra = $sqrt_psd(a);
            let inner = $hermitize(&(ra * b * ra));
            let eig = SymmetricEigen::new(inner);
            let zero_tol = zero_threshold(eig.eigenvalues.iter());
            let tr: f64 = eig
                .eigenvalues
                .iter()
                .filter(|v| **v > zero_tol)
                .map(|v| v.sqrt())
                .sum();
            (tr * tr).min(1.0)
        }
    };
}

hermitian_impls!(
    Matrix2<C64>, 2, hermitize2, eigenvalues2, psd_clamp2, sqrt_psd2, fidelity2
);
hermitian_impls!(
    Matrix4<C64>, 4, hermitize4, eigenvalues4, psd_clamp4, sqrt_psd4, fidelity4
);

fn zero_threshold<'a>(eigenvalues: impl Iterator<Item = &'a f64>) -> f64 {
    let lmax = eigenvalues.fold(0.0f64, |acc, v| acc.max(v.abs()));
    1e-14 * lmax.max(f64::MIN_POSITIVE)
}

/// Largest elementwise |m - m†|.
pub fn hermiticity_deviation2(m: &Matrix2<C64>) -> f64 {
    let d = m - m.adjoint();
    d.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn hermiticity_deviation4(m: &Matrix4<C64>) -> f64 {
    let d = m - m.adjoint();
    d.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
