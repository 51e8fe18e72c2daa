use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input that does not describe a well-formed object (wrong lengths,
    /// colors out of range, bad vertex ids, ...).
    #[error("ill-formed input: {0}")]
    IllFormed(String),

    /// A documented precondition of an operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The selected solver does not apply to this instance.
    #[error("wrong solver: {0}")]
    WrongSolver(String),

    #[error("graph is not a cograph")]
    NotACograph,

    #[error("graph is not a split graph")]
    NotSplit,

    /// An exhaustive search ran out of budget before it could decide.
    #[error("search budget exhausted after {states} states")]
    BudgetExceeded { states: usize },

    /// Syntax error in an instance file. Line and column are 1-based.
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The file parsed, but its content is not a legal instance.
    #[error("invalid instance: {0}")]
    Semantic(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn ill_formed(msg: impl Into<String>) -> Error {
    Error::IllFormed(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
