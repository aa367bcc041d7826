//! Pauli operators and the 16-element two-qubit product basis M_ij = M_i ⊗ M_j.

use nalgebra::{Matrix2, Matrix4};

pub type C64 = num_complex::Complex<f64>;

pub const fn c(re: f64, im: f64) -> C64 {
    C64 { re, im }
}

pub fn identity2() -> Matrix2<C64> {
    Matrix2::identity()
}

pub fn sigma_x() -> Matrix2<C64> {
    Matrix2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
}

pub fn sigma_y() -> Matrix2<C64> {
    Matrix2::new(c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0))
}

pub fn sigma_z() -> Matrix2<C64> {
    Matrix2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0))
}

/// Single-qubit basis element M_i for i in 0..4, ordered (I, σ_x, σ_y, σ_z).
pub fn pauli(i: usize) -> Matrix2<C64> {
    match i {
        0 => identity2(),
        1 => sigma_x(),
        2 => sigma_y(),
        3 => sigma_z(),
        _ => panic!("Pauli index {i} out of range"),
    }
}

/// Two-qubit basis element M_ij = M_i ⊗ M_j.
pub fn pauli_pair(i: usize, j: usize) -> Matrix4<C64> {
    pauli(i).kronecker(&pauli(j))
}

/// Coefficients p_ij = Tr(M_ij op), flattened as p[4i + j].
///
/// The coefficients are plain traces with no 1/4 normalization; the factor
/// lives in [`pauli_reconstruction`]. Real parts are returned since the input
/// is Hermitian.
pub fn pauli_expansion(op: &Matrix4<C64>) -> [f64; 16] {
    let mut p = [0.0; 16];
    for i in 0..4 {
        for j in 0..4 {
            p[4 * i + j] = (pauli_pair(i, j) * op).trace().re;
        }
    }
    p
}

/// Inverse of [`pauli_expansion`]: op = ¼ Σ_ij p_ij M_ij.
pub fn pauli_reconstruction(p: &[f64; 16]) -> Matrix4<C64> {
    let mut op = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            op += pauli_pair(i, j) * c(0.25 * p[4 * i + j], 0.0);
        }
    }
    op
}
