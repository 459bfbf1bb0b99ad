//! Gel'fand-Zetlin bases for the covariant tensor representations of the Lie
//! superalgebra `gl(m|n)`, the exact action of its Chevalley generators, and
//! the Clebsch-Gordan coefficients of `V([μ]) ⊗ V([1,0,…,0])`.
//!
//! Everything is computed exactly: matrix elements live in
//! [`arith::RadicalScalar`], sums of rational multiples of square roots of
//! squarefree integers, where equality and zero tests are decidable.

pub mod action;
pub mod arith;
pub mod cgc;
pub mod characters;
pub mod exec;
pub mod linalg;
pub mod patterns;
pub mod sparse;

mod error;

pub use error::{Error, Result};
pub use exec::Exec;
