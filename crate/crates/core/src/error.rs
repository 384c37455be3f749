//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: expected total {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(String),

    #[error("partition {0} is not a 2-core (it has a removable domino)")]
    NotTwoCore(String),

    #[error("unknown class label: {0}")]
    UnknownClass(String),

    #[error("incompatible radicands {0} and {1}")]
    IncompatibleRadicands(i64, i64),

    #[error("value does not lie in the half-integer ring (denominator 2)")]
    NotRepresentable,

    #[error("resource bound exceeded: {what} = {requested} is above the configured bound {bound}")]
    ResourceBound {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
