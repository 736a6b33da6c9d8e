use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertices {0} and {1} of the given set are not adjacent")]
    NotAClique(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("h-vector is not palindromic (first mismatch at index {index})")]
    NotPalindromic { index: usize },

    #[error("dimension mismatch: expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Input that failed to parse, with the position of the offending data.
#[derive(Debug, Clone, PartialEq, Eq, Error, serde::Serialize)]
#[error("{location}: {message}")]
pub struct ParseError {
    pub location: Location,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    /// 1-based line number in a text format.
    Line(usize),
    /// 0-based byte offset in a binary-ish format (graph6).
    Byte(usize),
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Line(l) => write!(f, "line {l}"),
            Location::Byte(b) => write!(f, "byte {b}"),
        }
    }
}

impl ParseError {
    pub fn at_line(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            location: Location::Line(line),
            message: message.into(),
        }
    }

    pub fn at_byte(byte: usize, message: impl Into<String>) -> Self {
        ParseError {
            location: Location::Byte(byte),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
