//! Highest weights, partitions and Gel'fand-Zetlin patterns for covariant
//! `gl(m|n)` modules.
//!
//! The inverse map [`partition_from_weight`] counts super components that are
//! *at least* `i`. Read literally with `≤`, the published inverse formula does
//! not invert the conjugation in [`weight_from_partition`]; the round-trip
//! tests pin the `≥` reading.

mod enumerate;
mod gz;
mod weight;

pub use enumerate::{dimension_of, enumerate_patterns, enumerate_patterns_with};
pub use gz::{highest_weight_pattern, GZPattern, Grading, Parity};
pub use weight::{
    is_typical, partition_from_weight, weight_from_partition, AlgebraShape, HighestWeight, Partition, Typicality,
    Weight,
};

/// `l_{ij}` of row `j` of a pattern.
pub fn l_label(p: &GZPattern, i: usize, j: usize) -> crate::Result<i64> {
    p.try_label(i, j)
}

/// Weight of a pattern.
pub fn pattern_weight(p: &GZPattern) -> Weight {
    p.weight()
}

/// Degree of a pattern under the given grading.
pub fn pattern_parity(p: &GZPattern, grading: Grading) -> Parity {
    p.parity(grading)
}
