use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    #[error("qubit index {qubit} out of range 1..={n}")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("qubit {0} used twice in a two-qubit operation")]
    CoincidentQubits(usize),
    #[error("gate deviates from unitarity by {deviation:e}")]
    NotUnitary { deviation: f64 },
    #[error("diagonal phase {index} has modulus {modulus}, expected 1")]
    NotUnitPhase { index: usize, modulus: f64 },
    #[error("matrix deviates from Hermitian by {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{n} qubits exceeds the dense-operation cap of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("non-finite {0}")]
    NonFinite(&'static str),
    #[error("invalid Hamiltonian spec: {0}")]
    InvalidSpec(String),
    #[error("segment {index} has negative duration {value}")]
    NegativeDuration { index: usize, value: f64 },
    #[error("base {0} is not a power of two >= 16")]
    InvalidBase(u64),
    #[error("invalid compiler config: {0}")]
    InvalidConfig(String),
    #[error("CNOT on non-adjacent qubits {control} and {target}")]
    NonAdjacent { control: usize, target: usize },
    #[error("invalid coincidence problem: {0}")]
    InvalidProblem(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
