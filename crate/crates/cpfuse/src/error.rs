//! Crate-wide error type with coarse categories for CLI exit codes.

use std::fmt;

/// Coarse error class, mapped to process exit codes by the CLI
/// (usage -> 1, data -> 2, internal -> 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Caller passed arguments that violate an operation's preconditions.
    Usage,
    /// Input data or a wire/file format violated its contract.
    Data,
    /// I/O failure or an unexpected internal condition.
    Internal,
}

#[derive(Debug)]
pub enum Error {
    /// An operation that requires documents received none.
    EmptyCorpus,
    /// A token of the input text is not in the word vocabulary.
    OutOfVocab(String),
    /// A token id is outside the vocabulary range.
    InvalidTokenId { id: u32, vocab_size: usize },
    /// Two distributions (or a distribution and a vocabulary) disagree in length.
    LengthMismatch { left: usize, right: usize },
    /// A fusion weight was negative.
    NegativeWeight(f64),
    /// A distribution entry was NaN or +inf where finite values are required.
    NonFinite(&'static str),
    /// A log-prob vector does not normalize within tolerance.
    NotNormalized { log_sum_exp: f64 },
    /// Number of distributions and history entries disagree, or a policy
    /// received the wrong number of models.
    ArityMismatch(String),
    /// The grid has no evaluation points.
    EmptyGrid,
    /// An argument value is out of its documented range.
    InvalidArgument(String),
    /// An input that must be non-empty was empty.
    EmptyInput(&'static str),
    /// Not enough documents to build the requested splits.
    InsufficientDocuments { have: usize, need: usize },
    /// A model or bloom file violated its format contract.
    Format(String),
    /// The remote-backend wire protocol was violated.
    Protocol(String),
    /// A remote backend did not answer within its deadline.
    Timeout,
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            EmptyCorpus | NegativeWeight(_) | ArityMismatch(_) | EmptyGrid
            | InvalidArgument(_) | EmptyInput(_) => ErrorCategory::Usage,
            OutOfVocab(_) | InvalidTokenId { .. } | LengthMismatch { .. } | NonFinite(_)
            | NotNormalized { .. } | InsufficientDocuments { .. } | Format(_)
            | Protocol(_) => ErrorCategory::Data,
            Timeout | Io(_) | Json(_) => ErrorCategory::Internal,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            EmptyCorpus => write!(f, "corpus is empty"),
            OutOfVocab(tok) => write!(f, "token {tok:?} is not in the vocabulary"),
            InvalidTokenId { id, vocab_size } => {
                write!(f, "token id {id} out of range for vocabulary of size {vocab_size}")
            }
            LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            NegativeWeight(w) => write!(f, "fusion weight must be non-negative, got {w}"),
            NonFinite(what) => write!(f, "non-finite value in {what}"),
            NotNormalized { log_sum_exp } => {
                write!(f, "distribution not normalized: log-sum-exp = {log_sum_exp:e}")
            }
            ArityMismatch(msg) => write!(f, "arity mismatch: {msg}"),
            EmptyGrid => write!(f, "grid has no evaluation points"),
            InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            EmptyInput(what) => write!(f, "{what} must be non-empty"),
            InsufficientDocuments { have, need } => {
                write!(f, "not enough documents: have {have}, need {need}")
            }
            Format(msg) => write!(f, "format error: {msg}"),
            Protocol(msg) => write!(f, "protocol error: {msg}"),
            Timeout => write!(f, "remote backend timed out"),
            Io(e) => write!(f, "i/o error: {e}"),
            Json(e) => write!(f, "json error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            Error::Json(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
