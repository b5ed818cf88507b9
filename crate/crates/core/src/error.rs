use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} rows, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("row {row} has value {value:#b}, which does not fit in {n_outputs} output bits")]
    OutputOverflow { row: usize, value: u32, n_outputs: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: u64, limit: u64 },

    #[error("variable x{var} is not in 1..={n}")]
    BadVariable { var: usize, n: usize },

    #[error("{n} variables exceeds the supported maximum of {max}")]
    TooManyVariables { n: usize, max: usize },

    #[error("function is not reversible")]
    NotReversible,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: circuit line x{index} is outside 1..={lines}")]
    LineIndexOutOfRange { line: usize, index: usize, lines: usize },

    #[error("line {line}: circuit line x{index} used more than once in a gate")]
    DuplicateControl { line: usize, index: usize },

    #[error("invalid gate: {reason}")]
    InvalidGate { reason: String },

    #[error("n = {n} is not supported here: {reason}")]
    UnsupportedN { n: usize, reason: &'static str },

    #[error("size (n = {n}, k = {k}) is too large to enumerate")]
    UnsupportedSize { n: usize, k: usize },

    #[error("not realizable as a half-V circuit (gate {gate}, witness inputs {:#b} and {:#b})", witness.0, witness.1)]
    NotRealizable { gate: usize, witness: (u32, u32) },

    #[error("arity mismatch: expected {expected}, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
