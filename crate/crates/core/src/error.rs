use thiserror::Error;

/// Errors shared across the compiler passes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("pauli string length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("unbound parameter symbol `{0}`")]
    UnboundSymbol(String),

    #[error("problem size {n} qubits exceeds the dense-oracle cap of {max}")]
    SizeCap { n: usize, max: usize },

    #[error("pauli string has empty support")]
    EmptySupport,

    #[error("invalid tree plan: {0}")]
    PlanMismatch(String),

    #[error("device has {physical} qubits but the program needs {logical}")]
    DeviceTooSmall { logical: usize, physical: usize },

    #[error("invalid device model: {0}")]
    InvalidDevice(String),

    #[error("invalid benchmark spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
