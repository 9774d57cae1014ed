//! Constructive compilation of `{H, T, CNOT}` circuits into switching
//! schedules.
//!
//! With base `B = 2^k` the coefficients fall off by a factor `B` per term:
//! `a_m = B^{-(m-1)}` for `H1`, and `b_1 > c_1 > b_2 > c_2 > …` with
//! `b_m = B^{-(2m-2)}`, `c_m = B^{-(2m-1)}` for `H2`. Evolving for a time
//! that puts the selected term at its target angle makes every stronger term
//! an exact multiple of π (identity up to sign) and leaves the weaker terms
//! with residual angles of order `1/B`, which are the only error source.

mod bounds;
mod circuit;
mod config;
mod routing;
mod schedules;

pub use bounds::{error_bound, primitive_bound, ErrorBudget};
pub use circuit::{circuit_unitary, Circuit, Gate};
pub use config::{standard_coefficients, CompilerConfig, Term};
pub use routing::route_circuit;
pub use schedules::{
    compile_circuit, gate_schedule, schedule_cnot, schedule_hadamard, schedule_t_gate, schedule_zz,
    Primitive,
};
