//! Action of the Chevalley generators on the GZ basis of a covariant module,
//! sparse assembly of the generator matrices, and an exact verifier for the
//! defining relations.
//!
//! Each coefficient is a signed square root of a ratio of integer products.
//! Zero factors that appear in both numerator and denominator cancel; a term
//! whose target pattern is not in the module is dropped before evaluation, so
//! a surviving zero denominator always indicates a bug and is reported as an
//! error.

mod formulas;
mod operators;
mod relations;

use std::collections::{BTreeMap, VecDeque};

pub use formulas::{act_e, act_f, act_h, PatternTerm};
pub use operators::{
    generator_matrix, matrix_unit, operator_on, supercommutator, Basis, Generator, Representation, SparseOperator,
};
pub use relations::{
    verify_defining_relations, verify_defining_relations_with, verify_representation, RelationCheck, RelationFamily,
    RelationReport, Witness,
};

use crate::arith::RadicalScalar;
use crate::linalg::{RowEchelon, SparseVector};
use crate::sparse::SparseMatrix;

fn apply_sparse(m: &SparseMatrix, v: &SparseVector) -> SparseVector {
    let mut out = SparseVector::new();
    for (j, x) in v {
        for (i, a) in m.column(*j) {
            let e = out.entry(*i).or_default();
            *e += a * x;
            if e.is_zero() {
                out.remove(i);
            }
        }
    }
    out
}

/// Dimension of the span of all `f`-words applied to the highest-weight
/// vector. Equals the module dimension exactly when that vector is cyclic.
pub fn lowering_span_dimension(rep: &Representation) -> usize {
    let basis = rep.basis();
    let r = rep.shape().r();
    let mut spaces: BTreeMap<Vec<i64>, RowEchelon> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let start: SparseVector = [(0usize, RadicalScalar::one())].into_iter().collect();
    spaces
        .entry(basis.pattern(0).weight().0)
        .or_insert_with(|| RowEchelon::new(basis.len()))
        .insert(start.clone());
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for k in 1..r {
            let w = apply_sparse(&rep.f(k).matrix, &v);
            let Some(&lead) = w.keys().next() else {
                continue;
            };
            let space = spaces
                .entry(basis.pattern(lead).weight().0)
                .or_insert_with(|| RowEchelon::new(basis.len()));
            if space.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    spaces.values().map(RowEchelon::rank).sum()
}
