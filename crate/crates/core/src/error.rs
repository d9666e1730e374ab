use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown series `{0}`")]
    UnknownSeries(String),

    #[error("series is not invertible (constant term is {0}, expected +1 or -1)")]
    NotInvertible(i64),

    #[error("no modification rules for label of length {length} (supported up to {max})")]
    UnsupportedLength { length: usize, max: usize },

    #[error("no known modification rule for {0}")]
    NoKnownRule(String),

    #[error("no modification rules for group {0}")]
    UnsupportedGroup(String),

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
