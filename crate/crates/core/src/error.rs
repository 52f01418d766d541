use thiserror::Error;

/// Errors produced by the census engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input violates a precondition (bad weights, empty subset, k too small, ...).
    #[error("validation error: {0}")]
    Validation(String),
    /// Request is well-formed but exceeds what this build can enumerate
    /// (e.g. more outcomes than the event bit width).
    #[error("capability error: {0}")]
    Capability(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

pub(crate) fn capability(msg: impl Into<String>) -> Error {
    Error::Capability(msg.into())
}
