//! Analytic error budget of compiled schedules.
//!
//! A primitive's compiled operator differs from the ideal one (up to global
//! phase) only by the commuting rotations `e^{-iθ_k P_k}` left on the terms
//! weaker than the selected one, where `P_k² = I`. Since
//! `‖e^{-iθP} - I‖ = 2|sin(θ/2)| ≤ |θ|` and the spectral-norm distance is
//! subadditive over products of unitaries, the sum of the residual angles
//! bounds the distance of a primitive, and the sum over gates bounds a whole
//! circuit.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{route_circuit, Circuit, CompilerConfig, Gate, Primitive};
use crate::{Error, Result};

/// Per-gate spectral-norm bounds and their total.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorBudget {
    pub per_gate: Vec<f64>,
    pub total: f64,
}

/// Sum of residual angles on terms weaker than the one `primitive` selects:
/// `Σ_{e > s} B^{-(e-s)} · target`.
pub fn primitive_bound(primitive: Primitive, config: &CompilerConfig) -> Result<f64> {
    primitive.duration(config)?;
    let selected = primitive.selected_term().exponent();
    let target = primitive.target_half_turns() * PI;
    Ok(config
        .terms(primitive.hamiltonian())
        .into_iter()
        .map(|t| t.exponent())
        .filter(|&e| e > selected)
        .map(|e| config.base_pow(selected - e) * target)
        // Not `sum`: an empty float sum is -0.0.
        .fold(0.0, |acc, x| acc + x))
}

fn adjacent_gate_bound(gate: &Gate, config: &CompilerConfig) -> Result<f64> {
    match *gate {
        Gate::H(q) => primitive_bound(Primitive::Hadamard(q), config),
        Gate::T(q) => primitive_bound(Primitive::T(q), config),
        Gate::Cnot { control, target } => {
            if control.abs_diff(target) != 1 {
                return Err(Error::NonAdjacent { control, target });
            }
            Ok(2.0 * primitive_bound(Primitive::Hadamard(target), config)?
                + 2.0 * primitive_bound(Primitive::T(control), config)?
                + 2.0 * primitive_bound(Primitive::T(target), config)?
                + primitive_bound(Primitive::Zz(control.min(target)), config)?)
        }
    }
}

/// Bound on the spectral-norm distance (up to global phase) between the
/// compiled schedule of each gate and the ideal gate. Non-adjacent CNOTs are
/// charged for their routed SWAP chains.
pub fn error_bound(circuit: &Circuit, config: &CompilerConfig) -> Result<ErrorBudget> {
    if circuit.n() != config.n() {
        return Err(Error::DimensionMismatch {
            expected: config.n(),
            found: circuit.n(),
        });
    }
    let mut per_gate = Vec::with_capacity(circuit.gates().len());
    for g in circuit.gates() {
        let single = Circuit::new(circuit.n(), alloc::vec![*g])?;
        let mut bound = 0.0;
        for routed in route_circuit(&single).gates() {
            bound += adjacent_gate_bound(routed, config)?;
        }
        per_gate.push(bound);
    }
    let total = per_gate.iter().fold(0.0, |acc, x| acc + x);
    Ok(ErrorBudget { per_gate, total })
}
