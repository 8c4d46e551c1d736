use thiserror::Error;

/// Errors raised by the toolkit.
///
/// The variants fall into three families that the command-line front end
/// maps to distinct exit codes: malformed input ([`Error::Parse`]),
/// exceeded truncation or series capacity ([`Error::Capacity`] and
/// [`Error::IndexOutOfRange`]) and mismatched or invalid arguments.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("sequence must have at least one entry")]
    Empty,

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("index {index} exceeds truncation {truncation}")]
    IndexOutOfRange { index: usize, truncation: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("element is not in the span of the given basis")]
    NotInSpan,

    #[error("series has no invertible linear coefficient")]
    NotInvertible,

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_) | Error::IndexOutOfRange { .. })
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Empty)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
