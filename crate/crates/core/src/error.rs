use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value outside the domain of the operation, e.g. a vanishing denominator.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed input from the caller.
    #[error("usage error: {0}")]
    Usage(String),
    /// A broken internal invariant. Seeing one of these is a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
