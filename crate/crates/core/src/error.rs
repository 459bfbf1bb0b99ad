use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("invalid algebra shape: {0}")]
    Shape(String),
    #[error("invalid highest weight {weight:?}: violates {condition}")]
    InvalidWeight { weight: Vec<i64>, condition: String },
    #[error("invalid pattern: violates {0}")]
    InvalidPattern(String),
    #[error("partition {0:?} is not in the ({1},{2})-hook")]
    NotInHook(Vec<usize>, usize, usize),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("no super row to remove: n = 0")]
    NoSuperRow,
    #[error("matrix element formula failed for {context}: {source}")]
    Formula {
        context: String,
        #[source]
        source: ArithError,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
