use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("ring mismatch")]
    RingMismatch,

    #[error("module order {order} exceeds cap {cap}")]
    ModuleTooLarge { order: u64, cap: u64 },

    #[error("submodule count exceeds cap {cap} (partial count {found})")]
    TooManySubmodules { found: usize, cap: usize },

    #[error("element {0} is not idempotent")]
    NotIdempotent(String),

    #[error("prime submodules are proper")]
    NotProper,

    #[error("variant infeasible: {0}")]
    VariantInfeasible(String),

    #[error("graph has {n} vertices, exact cap is {cap}")]
    ExactCapExceeded { n: usize, cap: usize },

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}
