//! Independent reference computations for `glmn` and the acceptance suite
//! built on them.
//!
//! The oracles here share only data types with the library: patterns are
//! found by exhaustive filling, dimensions and characters by counting
//! tableaux, and coupling coefficients by solving the raising equations on
//! the product space.

pub mod acceptance;
pub mod brute;
pub mod closed_forms;
pub mod oracle;
pub mod tableaux;
