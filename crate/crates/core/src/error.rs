use thiserror::Error;

/// Errors raised by word construction and the evaluation engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset} (token {token}): {message}")]
    Syntax {
        offset: usize,
        token: usize,
        message: String,
    },

    #[error("generator {letter} is out of range for {n} strands")]
    IndexOutOfRange { letter: String, n: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("free word exceeded the cap of {cap} letters")]
    ResourceLimit { cap: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),

    #[error("outside the operation's domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
