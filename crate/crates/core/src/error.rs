use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument violates the precondition of the operation it was passed to.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Bisection could not bracket the root, e.g. the predicate already holds
    /// at the upper end of the search interval.
    #[error("bisection failed: {0}")]
    Bracket(String),

    /// Two independent evaluations of the same quantity disagree.
    #[error("inconsistent results: {0}")]
    Inconsistent(String),

    #[error("malformed frame text at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for errors caused by the caller's arguments rather than by a
    /// numerical procedure.
    pub fn is_parameter_error(&self) -> bool {
        matches!(self, Error::InvalidParameter { .. } | Error::Parse { .. })
    }
}
