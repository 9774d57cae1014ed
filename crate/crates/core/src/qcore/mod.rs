//! Complex linear-algebra substrate: statevectors, small dense matrices,
//! the fixed gate matrices and phase-invariant comparison metrics.

mod eigen;
mod expm;
pub mod gates;
mod matrix;
mod metrics;
mod state;

pub use eigen::{hermitian_eigen, HermitianEigen};
pub use expm::dense_expm_hermitian;
pub use matrix::{CMatrix, DenseUnitary, Mat2};
pub use metrics::{fidelity_phase_invariant, phase_invariant_distance, unitary_eigenphases};
pub use state::StateVector;

/// Complex amplitude type used everywhere.
pub type C64 = num_complex::Complex64;

/// Entrywise tolerance on `U†U = I` for gates and dense unitaries.
pub const UNITARY_TOL: f64 = 1e-9;
/// Tolerance on the modulus of diagonal phases.
pub const PHASE_TOL: f64 = 1e-12;
/// Entrywise tolerance on `H = H†`.
pub const HERMITIAN_TOL: f64 = 1e-9;
