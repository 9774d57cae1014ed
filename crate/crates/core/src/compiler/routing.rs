use alloc::vec::Vec;

use super::{Circuit, Gate};

fn cnot(control: usize, target: usize) -> Gate {
    Gate::Cnot { control, target }
}

/// SWAP of neighbours `a`, `b` as three alternating CNOTs.
fn swap(a: usize, b: usize) -> [Gate; 3] {
    [cnot(a, b), cnot(b, a), cnot(a, b)]
}

/// Rewrites every CNOT between non-neighbouring qubits as a chain of SWAPs
/// that brings the target next to the control, the adjacent CNOT, and the
/// same SWAPs undone. A CNOT spanning distance `d` becomes `6(d-1) + 1`
/// adjacent CNOTs. Other gates pass through unchanged.
pub fn route_circuit(circuit: &Circuit) -> Circuit {
    let mut gates = Vec::with_capacity(circuit.gates().len());
    for &g in circuit.gates() {
        match g {
            Gate::Cnot { control, target } if control.abs_diff(target) > 1 => {
                // Walk the target one site at a time towards the control.
                let path: Vec<(usize, usize)> = if target > control {
                    (control + 2..=target).rev().map(|k| (k, k - 1)).collect()
                } else {
                    (target..control - 1).map(|k| (k, k + 1)).collect()
                };
                let landing = if target > control {
                    control + 1
                } else {
                    control - 1
                };
                for &(a, b) in &path {
                    gates.extend(swap(a, b));
                }
                gates.push(cnot(control, landing));
                for &(a, b) in path.iter().rev() {
                    gates.extend(swap(a, b));
                }
            }
            other => gates.push(other),
        }
    }
    Circuit::new(circuit.n(), gates).expect("routing keeps indices in range")
}
