use alloc::format;
use alloc::string::ToString;

use super::{route_circuit, Circuit, CompilerConfig, Gate, Term};
use crate::hamiltonians::Which;
use crate::phase::EvolutionTime;
use crate::qcore::gates::{t_gate, zz_phases, HADAMARD};
use crate::qcore::{DenseUnitary, StateVector};
use crate::simulator::{Schedule, Segment};
use crate::{Error, Result};

/// A gate realized by a single switching segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitive {
    /// `H` on qubit `m` from `H1`.
    Hadamard(usize),
    /// `T` on qubit `m` from `H2`.
    T(usize),
    /// `e^{+iπ/4 Z⊗Z}` on `(m, m+1)` from `H2`.
    Zz(usize),
}

impl Primitive {
    pub fn hamiltonian(self) -> Which {
        match self {
            Primitive::Hadamard(_) => Which::H1,
            Primitive::T(_) | Primitive::Zz(_) => Which::H2,
        }
    }

    /// The term this primitive selects.
    pub fn selected_term(self) -> Term {
        match self {
            Primitive::Hadamard(m) => Term::A(m),
            Primitive::T(m) => Term::B(m),
            Primitive::Zz(m) => Term::C(m),
        }
    }

    /// Angle (in units of π) the selected term must accumulate: `π/2` for
    /// `H`, `π/8` for `T`, `3π/4` for the `ZZ` factor (`e^{-i3π/4 ZZ}` is
    /// `e^{+iπ/4 ZZ}` up to sign).
    pub fn target_half_turns(self) -> f64 {
        match self {
            Primitive::Hadamard(_) => 0.5,
            Primitive::T(_) => 0.125,
            Primitive::Zz(_) => 0.75,
        }
    }

    fn check(self, config: &CompilerConfig) -> Result<()> {
        match self {
            Primitive::Hadamard(m) | Primitive::T(m) => config.check_qubit(m),
            Primitive::Zz(m) => {
                config.check_qubit(m)?;
                config.check_qubit(m + 1)
            }
        }
    }

    /// Duration `B^{e}·target` where `e` is the selected term's exponent.
    pub fn duration(self, config: &CompilerConfig) -> Result<EvolutionTime> {
        self.check(config)?;
        let e = self.selected_term().exponent();
        EvolutionTime::from_half_turns(config.base_pow(e) * self.target_half_turns())
    }

    pub fn schedule(self, config: &CompilerConfig) -> Result<Schedule> {
        let d = self.duration(config)?;
        Ok(Schedule::from_segments(alloc::vec![Segment::new(
            self.hamiltonian(),
            d
        )
        .with_label(self.to_string())]))
    }

    /// The ideal operator on `n` qubits.
    pub fn ideal_unitary(self, n: usize) -> Result<DenseUnitary> {
        let dim = 1usize << n;
        let mut m = crate::qcore::CMatrix::zeros(dim);
        for col in 0..dim {
            let mut s = StateVector::basis_state(n, col);
            match self {
                Primitive::Hadamard(q) => s.apply_single_qubit(q, &HADAMARD)?,
                Primitive::T(q) => s.apply_single_qubit(q, &t_gate())?,
                Primitive::Zz(q) => {
                    s.apply_two_qubit_diagonal(q, q + 1, &zz_phases(-core::f64::consts::FRAC_PI_4))?
                }
            }
            m.set_column(col, s.amplitudes());
        }
        DenseUnitary::new(n, m)
    }
}

impl core::fmt::Display for Primitive {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Primitive::Hadamard(m) => write!(f, "H({m})"),
            Primitive::T(m) => write!(f, "T({m})"),
            Primitive::Zz(m) => write!(f, "ZZ({m},{})", m + 1),
        }
    }
}

/// `H` on qubit `m`: one `H1` segment of length `B^{m-1}·π/2`.
pub fn schedule_hadamard(m: usize, config: &CompilerConfig) -> Result<Schedule> {
    Primitive::Hadamard(m).schedule(config)
}

/// `T` on qubit `m`: one `H2` segment of length `B^{2m-2}·π/8`.
pub fn schedule_t_gate(m: usize, config: &CompilerConfig) -> Result<Schedule> {
    Primitive::T(m).schedule(config)
}

/// `e^{+iπ/4 Z_m Z_{m+1}}` (up to phase): one `H2` segment of length
/// `B^{2m-1}·3π/4`.
pub fn schedule_zz(m: usize, config: &CompilerConfig) -> Result<Schedule> {
    Primitive::Zz(m).schedule(config)
}

/// CNOT between neighbours from `(I⊗H) e^{iπ ZZ/4} (T²⊗T²) (I⊗H)`, in time
/// order `H(target)`, `T(control)²`, `T(target)²`, `ZZ`, `H(target)`.
///
/// `e^{iπZZ/4}(T²⊗T²)` is a controlled-Z up to phase, which is symmetric in
/// the two qubits, so either orientation only needs the Hadamards on the
/// actual target.
pub fn schedule_cnot(control: usize, target: usize, config: &CompilerConfig) -> Result<Schedule> {
    config.check_qubit(control)?;
    config.check_qubit(target)?;
    if control.abs_diff(target) != 1 {
        return Err(Error::NonAdjacent { control, target });
    }
    let h = schedule_hadamard(target, config)?;
    Ok(h.clone()
        .then(schedule_t_gate(control, config)?)
        .then(schedule_t_gate(control, config)?)
        .then(schedule_t_gate(target, config)?)
        .then(schedule_t_gate(target, config)?)
        .then(schedule_zz(control.min(target), config)?)
        .then(h))
}

/// Schedule for one adjacent gate, segments labelled with the gate name.
pub fn gate_schedule(gate: &Gate, config: &CompilerConfig) -> Result<Schedule> {
    let mut s = match *gate {
        Gate::H(q) => schedule_hadamard(q, config)?,
        Gate::T(q) => schedule_t_gate(q, config)?,
        Gate::Cnot { control, target } => schedule_cnot(control, target, config)?,
    };
    let name = gate.to_string();
    for seg in &mut s.segments {
        seg.label = Some(match seg.label.take() {
            Some(part) if part != name => format!("{name}: {part}"),
            _ => name.clone(),
        });
    }
    Ok(s)
}

/// Routes `circuit` onto the chain, emits each gate's schedule in circuit
/// order and normalizes the result.
pub fn compile_circuit(circuit: &Circuit, config: &CompilerConfig) -> Result<Schedule> {
    if circuit.n() != config.n() {
        return Err(Error::DimensionMismatch {
            expected: config.n(),
            found: circuit.n(),
        });
    }
    let mut out = Schedule::new();
    for g in route_circuit(circuit).gates() {
        out.extend(gate_schedule(g, config)?);
    }
    out.normalize()
}
