//! Error type shared by all modules.

/// Errors produced by the library.
///
/// `Inconsistency` is reserved for failures of internal cross-checks (two
/// independent computation routes disagreeing); callers should treat it as
/// fatal rather than recoverable input validation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
