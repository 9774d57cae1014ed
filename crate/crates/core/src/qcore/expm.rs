use alloc::vec::Vec;

use super::{hermitian_eigen, CMatrix, DenseUnitary, C64};
use crate::{Error, Result, DEFAULT_MAX_DENSE_N};

/// `e^{-i·H·t}` for a Hermitian `H` of dimension `2^n`, `n ≤ 10`, through an
/// eigendecomposition `H = V Λ V†`.
///
/// Independent of the factorized evolution code, so it serves as the oracle
/// for every `e^{-iHt}` claim.
pub fn dense_expm_hermitian(hamiltonian: &CMatrix, t: f64) -> Result<DenseUnitary> {
    if !t.is_finite() {
        return Err(Error::NonFinite("evolution time"));
    }
    let dim = hamiltonian.dim();
    if !dim.is_power_of_two() {
        return Err(Error::InvalidArgument(
            "dimension is not a power of two".into(),
        ));
    }
    let n = dim.trailing_zeros() as usize;
    if n > DEFAULT_MAX_DENSE_N {
        return Err(Error::TooLarge {
            n,
            max: DEFAULT_MAX_DENSE_N,
        });
    }
    let eig = hermitian_eigen(hamiltonian)?;
    let phases: Vec<C64> = eig
        .values
        .iter()
        .map(|&lambda| C64::from_polar(1.0, -lambda * t))
        .collect();
    let v = &eig.vectors;
    let matrix = v
        .matmul(&CMatrix::from_diagonal(&phases))
        .matmul(&v.adjoint());
    DenseUnitary::new(n, matrix)
}
