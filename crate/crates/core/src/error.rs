use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("incompatible field: {0}")]
    IncompatibleField(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("slot {slot} out of range for {n} strands")]
    SlotOutOfRange { slot: usize, n: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("not periodic on the lattice: {0}")]
    NotPeriodic(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("inadmissible coloring: {0}")]
    Inadmissible(String),
    #[error("diagram is not closed: {0}")]
    OpenDiagram(String),
    #[error("not a string link: {0}")]
    NotStringLink(String),
}

pub type Result<T> = std::result::Result<T, Error>;
