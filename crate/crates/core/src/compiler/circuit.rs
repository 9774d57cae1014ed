use alloc::vec::Vec;
use core::fmt;

use crate::qcore::gates::{t_gate, HADAMARD};
use crate::qcore::{CMatrix, DenseUnitary, StateVector};
use crate::{Error, Result};

/// A gate of the standard set, on 1-based qubit indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    T(usize),
    Cnot { control: usize, target: usize },
}

impl Gate {
    pub fn is_adjacent_cnot(&self) -> bool {
        matches!(*self, Gate::Cnot { control, target } if control.abs_diff(target) == 1)
    }

    fn validate(&self, n: usize) -> Result<()> {
        let check = |qubit: usize| {
            if qubit == 0 || qubit > n {
                Err(Error::QubitOutOfRange { qubit, n })
            } else {
                Ok(())
            }
        };
        match *self {
            Gate::H(q) | Gate::T(q) => check(q),
            Gate::Cnot { control, target } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(Error::CoincidentQubits(control));
                }
                Ok(())
            }
        }
    }

    /// Applies the ideal gate.
    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        match *self {
            Gate::H(q) => state.apply_single_qubit(q, &HADAMARD),
            Gate::T(q) => state.apply_single_qubit(q, &t_gate()),
            Gate::Cnot { control, target } => state.apply_cnot(control, target),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H({q})"),
            Gate::T(q) => write!(f, "T({q})"),
            Gate::Cnot { control, target } => write!(f, "CNOT({control},{target})"),
        }
    }
}

/// Gates on a chain of `n` qubits, in time order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize, gates: Vec<Gate>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "circuit needs at least one qubit".into(),
            ));
        }
        for g in &gates {
            g.validate(n)?;
        }
        Ok(Self { n, gates })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn cnot_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| matches!(g, Gate::Cnot { .. }))
            .count()
    }

    /// Applies every ideal gate in order.
    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        if state.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: state.n(),
            });
        }
        self.gates.iter().try_for_each(|g| g.apply(state))
    }
}

/// Ideal dense unitary of `circuit`, for `n ≤ max_n`.
pub fn circuit_unitary(circuit: &Circuit, max_n: usize) -> Result<DenseUnitary> {
    let n = circuit.n();
    if n > max_n {
        return Err(Error::TooLarge { n, max: max_n });
    }
    let dim = 1usize << n;
    let mut m = CMatrix::zeros(dim);
    for col in 0..dim {
        let mut s = StateVector::basis_state(n, col);
        circuit.apply(&mut s)?;
        m.set_column(col, s.amplitudes());
    }
    DenseUnitary::new(n, m)
}
