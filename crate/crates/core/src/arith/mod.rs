//! Exact scalars closed under the square roots that appear in the matrix
//! elements and isoscalar factors.

mod factor;
mod radical;
mod root;

use thiserror::Error;

pub use factor::{factorize, factorize_u64, squarefree_split};
pub use radical::{parse_rational, sqrt_rational, ExactRational, RadicalScalar};
pub use root::{RootFactors, RootValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("negative radicand: {0}")]
    NegativeRadicand(String),
    #[error("zero factor left in a denominator: {0}")]
    ZeroDenominator(String),
    #[error("squarefree radicand does not fit in 64 bits: {0}")]
    RadicandOverflow(String),
}

/// Shorthand for an integer-valued rational.
pub fn rational(n: i64) -> ExactRational {
    ExactRational::from_integer(n.into())
}

/// Shorthand for `a / b`.
pub fn ratio(a: i64, b: i64) -> ExactRational {
    ExactRational::new(a.into(), b.into())
}
