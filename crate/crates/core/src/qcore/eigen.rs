//! Cyclic Jacobi eigendecomposition of complex Hermitian matrices.

use alloc::vec::Vec;

use super::{CMatrix, C64, HERMITIAN_TOL};
use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// `A = V · diag(values) · V†` with orthonormal columns in `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

/// Eigendecomposition of a Hermitian matrix (within [`HERMITIAN_TOL`]).
pub fn hermitian_eigen(matrix: &CMatrix) -> Result<HermitianEigen> {
    let deviation = matrix.hermiticity_deviation();
    if !(deviation <= HERMITIAN_TOL) {
        return Err(Error::NotHermitian { deviation });
    }
    let n = matrix.dim();
    // Work on the exactly Hermitian part.
    let mut a = matrix.add(&matrix.adjoint()).scale(C64::new(0.5, 0.0));
    let mut v = CMatrix::identity(n);

    let scale = a.as_slice().iter().map(|x| x.norm()).fold(0.0, f64::max);
    let threshold = f64::EPSILON * f64::EPSILON * scale * scale;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum();
        if off <= threshold || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    Ok(HermitianEigen {
        values: (0..n).map(|i| a[(i, i)].re).collect(),
        vectors: v,
    })
}

/// Zeroes `a[p][q]` with the unitary `G = diag(1, e^{-iα}) · R(θ)` acting on
/// the `(p, q)` plane, accumulating `V ← V G`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iα}
    let (x, y) = (a[(p, p)].re, a[(q, q)].re);
    let theta = 0.5 * libm::atan2(2.0 * r, y - x);
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let conj = phase.conj(); // e^{-iα}
    let g_pp = C64::new(c, 0.0);
    let g_pq = C64::new(s, 0.0);
    let g_qp = conj * (-s);
    let g_qq = conj * c;

    let n = a.dim();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}
