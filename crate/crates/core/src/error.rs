use thiserror::Error;

/// Errors raised by the toolkit. Verdicts such as "inconclusive" are not
/// errors; they are reported through [`crate::report::Status`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("ring is infinite")]
    InfiniteRing,
    #[error("unsupported ring kind for this operation: {0}")]
    UnsupportedKind(String),
    #[error("index ({0}, {1}) out of range for size {2}")]
    IndexOutOfRange(usize, usize, usize),
    #[error("elementary matrix needs distinct indices, got i = j = {0}")]
    EqualIndices(usize),
    #[error("entry {0} is not a unit")]
    NonUnit(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("unsupported root system label: {0}")]
    UnsupportedLabel(String),
    #[error("root {0} is not tabulated in this model")]
    UnknownRoot(String),
    #[error("type {0} is not modelled in characteristic 2")]
    Char2Unsupported(String),
    #[error("no tabulated Borel map for ({0}, {1})")]
    UnsupportedPair(String, String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("inclusion map violates a relator: {0}")]
    VonDyckViolation(String),
    #[error("complex is not connected")]
    DisconnectedComplex,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
