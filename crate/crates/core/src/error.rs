//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable not bound: {0}")]
    UnboundVariable(String),

    #[error("variable is bound and cannot be substituted: {0}")]
    BoundVariable(String),

    #[error("variable {0} occurs as left-hand side of more than one equation")]
    DuplicateLhs(String),

    #[error("structure graph is not BESsy: {0}")]
    NotBessy(String),

    #[error("vertex {0} has no rank")]
    Unranked(usize),

    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),

    #[error("invalid choice function: {0}")]
    InvalidChoice(String),

    #[error("mixed graph: both conjunctive and disjunctive vertices are present")]
    MixedGraph,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("ill-formed formula: {0}")]
    IllFormed(String),

    #[error("action tau is already present in the transition system")]
    TauPresent,

    #[error("generated identifier {0} collides with an existing one")]
    NameCollision(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors raised while reading text input.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::DuplicateLhs(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
