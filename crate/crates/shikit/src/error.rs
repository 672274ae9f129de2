use thiserror::Error;

/// Errors surfaced by validation, parsing and resource guards.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid antichain: {0}")]
    InvalidAntichain(String),
    #[error("invalid (S, g) pair: {0}")]
    InvalidSg(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
