use thiserror::Error;

/// Errors raised by the symbolic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live over different alphabets")]
    AlphabetMismatch,
    #[error("symbol index {0} is not in the alphabet")]
    ForeignSymbol(u16),
    #[error("operation needs a nonzero polynomial")]
    EmptyPolynomial,
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown symbol `{name}` at byte {offset}")]
    UnknownSymbol { name: String, offset: usize },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid order spec: {0}")]
    InvalidOrder(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
