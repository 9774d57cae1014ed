//! Compiler and exact simulator for universal dynamics driven by switching
//! globally between two fixed 2-local Hamiltonians on a chain of qubits:
//!
//! ```text
//! H1 = Σ_m a_m (X_m + Z_m)/√2
//! H2 = Σ_m b_m Z_m + Σ_m c_m Z_m Z_{m+1}
//! ```
//!
//! Only one Hamiltonian is on at any time, so a control program is a
//! [`Schedule`] of `(H1 | H2, duration)` segments. The [`compiler`] turns a
//! circuit over `{H, T, CNOT}` into such a schedule using power-of-two
//! coefficient strengths, the [`simulator`] executes schedules exactly on a
//! statevector, and [`search`] finds coincidence times for arbitrary
//! (incommensurate) coefficients.
//!
//! Conventions used throughout:
//! * qubits are indexed `1..=n`, and qubit 1 is the most significant bit of
//!   a computational basis index;
//! * time is dimensionless (ħ = 1) and segment `k` of a schedule happens
//!   after segment `k - 1`, so the overall operator is `U_K ··· U_2 U_1`;
//! * gates are realized up to a global phase, and fidelities are the
//!   phase-invariant overlap `|tr(U†V)| / 2^n`.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
// `!(x <= tol)` is deliberate: NaN must fail tolerance checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod compiler;
mod error;
pub mod hamiltonians;
pub mod phase;
pub mod qcore;
pub mod search;
pub mod simulator;

pub use compiler::{Circuit, CompilerConfig, ErrorBudget, Gate};
pub use error::{Error, Result};
pub use hamiltonians::{FactorizedEvolution, HamiltonianSpec, Which};
pub use phase::EvolutionTime;
pub use qcore::{CMatrix, DenseUnitary, StateVector, C64};
pub use search::{CoincidenceProblem, CoincidenceResult};
pub use simulator::{Schedule, Segment};

/// Largest qubit count accepted by dense (`2^n × 2^n`) operations unless a
/// caller passes its own cap.
pub const DEFAULT_MAX_DENSE_N: usize = 10;
