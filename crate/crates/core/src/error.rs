use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex: {0}")]
    InvalidVertex(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("degenerate parameter: {0}")]
    Parameter(String),
    #[error("unsupported: {0}")]
    Capability(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
