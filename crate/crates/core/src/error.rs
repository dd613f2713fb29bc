use thiserror::Error;

use crate::root_system::Kind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("operation not supported for type {kind:?}: {what}")]
    UnsupportedKind { kind: Kind, what: &'static str },

    #[error("elements live in different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    /// An arithmetic result contradicts a known structural guarantee.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
