//! Command-line front end for `hamweave-core`: spec generation, circuit
//! compilation, schedule simulation, fidelity reports and coincidence
//! search, reading and writing JSON and CSV.

// `!(x <= tol)` is deliberate: NaN must fail tolerance checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod error;
pub mod expr;
pub mod formats;
pub mod report;

pub use error::{CliError, Result};
