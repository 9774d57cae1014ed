use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{hermitian_eigen, CMatrix, DenseUnitary, C64};
use crate::{Error, Result};

/// Eigenvalues of `K = (W+W†)/2` closer than this are treated as one cluster
/// when pairing them with the eigenvalues of `(W-W†)/2i`.
const CLUSTER_TOL: f64 = 1e-6;

fn check_same_n(u: &DenseUnitary, v: &DenseUnitary) -> Result<()> {
    if u.n() != v.n() {
        return Err(Error::DimensionMismatch {
            expected: u.n(),
            found: v.n(),
        });
    }
    Ok(())
}

/// `|tr(U†V)| / 2^n`, in `[0, 1]` and equal to 1 exactly when `U = e^{iφ}V`.
pub fn fidelity_phase_invariant(u: &DenseUnitary, v: &DenseUnitary) -> Result<f64> {
    check_same_n(u, v)?;
    let overlap: C64 = u
        .matrix()
        .as_slice()
        .iter()
        .zip(v.matrix().as_slice())
        .map(|(a, b)| a.conj() * b)
        .sum();
    Ok((overlap.norm() / u.dim() as f64).min(1.0))
}

/// Eigenphases `λ_k ∈ (-π, π]` of a unitary `W`, found by diagonalizing the
/// commuting Hermitian parts `(W+W†)/2` and `(W-W†)/2i` jointly.
pub fn unitary_eigenphases(w: &DenseUnitary) -> Result<Vec<f64>> {
    let m = w.matrix();
    let adj = m.adjoint();
    let cos_part = m.add(&adj).scale(C64::new(0.5, 0.0));
    let sin_part = m.sub(&adj).scale(C64::new(0.0, -0.5));

    let eig = hermitian_eigen(&cos_part)?;
    let mut order: Vec<usize> = (0..eig.values.len()).collect();
    order.sort_by(|&i, &j| eig.values[i].total_cmp(&eig.values[j]));

    let mut phases = Vec::with_capacity(order.len());
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && eig.values[order[end]] - eig.values[order[end - 1]] < CLUSTER_TOL
        {
            end += 1;
        }
        let cluster = &order[start..end];
        let cos_mean = cluster.iter().map(|&i| eig.values[i]).sum::<f64>() / cluster.len() as f64;

        // S restricted to the cluster's eigenspace.
        let k = cluster.len();
        let mut block = CMatrix::zeros(k);
        let cols: Vec<Vec<C64>> = cluster.iter().map(|&i| eig.vectors.column(i)).collect();
        let s_cols: Vec<Vec<C64>> = cols.iter().map(|c| sin_part.mul_vec(c)).collect();
        for r in 0..k {
            for c in 0..k {
                block[(r, c)] = cols[r]
                    .iter()
                    .zip(&s_cols[c])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
            }
        }
        let sines = hermitian_eigen(&block)?.values;
        phases.extend(sines.into_iter().map(|s| libm::atan2(s, cos_mean)));
        start = end;
    }
    Ok(phases)
}

/// `min_φ ‖U - e^{iφ}V‖₂`, the spectral-norm distance up to global phase.
///
/// With `W = V†U` having eigenphases covered by a shortest arc of length
/// `L`, the optimum puts `φ` at the middle of that arc and the distance is
/// the chord `2 sin(L/4)`.
pub fn phase_invariant_distance(u: &DenseUnitary, v: &DenseUnitary) -> Result<f64> {
    check_same_n(u, v)?;
    let w = v.adjoint().compose(u)?;
    let mut phases = unitary_eigenphases(&w)?;
    phases.sort_by(f64::total_cmp);
    let mut max_gap = 2.0 * PI + phases[0] - phases[phases.len() - 1];
    for pair in phases.windows(2) {
        max_gap = max_gap.max(pair[1] - pair[0]);
    }
    let arc = (2.0 * PI - max_gap).max(0.0);
    Ok(2.0 * libm::sin(arc / 4.0))
}
