//! Fixed gate matrices of the standard set `{H, T, CNOT}` and the Pauli
//! operators they are built from.

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_8};

use super::{CMatrix, Mat2, C64};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

pub const IDENTITY: Mat2 = [[ONE, ZERO], [ZERO, ONE]];
pub const PAULI_X: Mat2 = [[ZERO, ONE], [ONE, ZERO]];
pub const PAULI_Z: Mat2 = [[ONE, ZERO], [ZERO, C64::new(-1.0, 0.0)]];
/// `(X + Z)/√2`.
pub const HADAMARD: Mat2 = [
    [C64::new(FRAC_1_SQRT_2, 0.0), C64::new(FRAC_1_SQRT_2, 0.0)],
    [C64::new(FRAC_1_SQRT_2, 0.0), C64::new(-FRAC_1_SQRT_2, 0.0)],
];

/// `T = e^{-iπ/8 Z} = diag(e^{-iπ/8}, e^{iπ/8})`.
pub fn t_gate() -> Mat2 {
    z_rotation(FRAC_PI_8)
}

/// `e^{-iθZ}`.
pub fn z_rotation(theta: f64) -> Mat2 {
    [
        [C64::from_polar(1.0, -theta), ZERO],
        [ZERO, C64::from_polar(1.0, theta)],
    ]
}

/// `e^{-iθ(X+Z)/√2} = cos θ · I - i sin θ · (X+Z)/√2`.
pub fn hadamard_axis_rotation(theta: f64) -> Mat2 {
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let d = -s * FRAC_1_SQRT_2;
    [
        [C64::new(c, d), C64::new(0.0, d)],
        [C64::new(0.0, d), C64::new(c, -d)],
    ]
}

/// Diagonal of `e^{-iψ Z⊗Z}` in the order `00, 01, 10, 11`.
pub fn zz_phases(psi: f64) -> [C64; 4] {
    let minus = C64::from_polar(1.0, -psi);
    let plus = C64::from_polar(1.0, psi);
    [minus, plus, plus, minus]
}

/// `e^{-iψ Z⊗Z}` as a 4×4 matrix.
pub fn zz_rotation(psi: f64) -> CMatrix {
    CMatrix::from_diagonal(&zz_phases(psi))
}

/// CNOT with the first (more significant) qubit as control.
pub fn cnot() -> CMatrix {
    let mut m = CMatrix::zeros(4);
    m[(0, 0)] = ONE;
    m[(1, 1)] = ONE;
    m[(2, 3)] = ONE;
    m[(3, 2)] = ONE;
    m
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat2_adjoint(a: &Mat2) -> Mat2 {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

/// Largest entrywise deviation of `a†a` from `I`.
pub fn mat2_unitarity_deviation(a: &Mat2) -> f64 {
    let p = mat2_mul(&mat2_adjoint(a), a);
    let mut worst = 0.0f64;
    for (i, row) in p.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            worst = worst.max((v - IDENTITY[i][j]).norm());
        }
    }
    worst
}
