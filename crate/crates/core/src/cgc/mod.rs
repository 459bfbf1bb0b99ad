//! Clebsch-Gordan coefficients of `V([μ]) ⊗ V([1,0,…,0])`.
//!
//! Every coefficient is a product of isoscalar factors along the subalgebra
//! chain. For `j ≤ n` the chain stops at a trivial coefficient; for `j > n` it
//! continues through the classical `gl(m) ⊃ … ⊃ gl(1)` tail, where the
//! standard Gel'fand-Zetlin isoscalar factors of the vector representation are
//! used.

mod isoscalar;
mod table;
mod verify;

use serde::Serialize;

pub use isoscalar::{isoscalar_factor, s_sign, IsoscalarKey};
pub use table::{cgc_table, cgc_table_with, CgcBlock, CgcEntry, CgcTable};
pub use verify::{
    verify_equivariance, verify_equivariance_with, verify_table, BlockGrading, CoproductRule, EquivarianceReport,
    GeneratorCheck,
};

use crate::arith::RadicalScalar;
use crate::error::{Error, Result};
use crate::patterns::{highest_weight_pattern, AlgebraShape, GZPattern, Grading, HighestWeight, Parity};

/// The basis vector `|1_j)` of the natural module: its top `j` rows are
/// `1 0 … 0`, the remaining rows are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NaturalVector {
    pub j: usize,
}

impl NaturalVector {
    pub fn new(shape: AlgebraShape, j: usize) -> Result<Self> {
        if j == 0 || j > shape.r() {
            return Err(Error::IndexOutOfRange(format!("|1_{j}) in {shape}")));
        }
        Ok(Self { j })
    }

    /// All `|1_j)`, `j = 1..=r`.
    pub fn all(shape: AlgebraShape) -> Vec<Self> {
        (1..=shape.r()).map(|j| Self { j }).collect()
    }

    pub fn pattern(self, shape: AlgebraShape) -> GZPattern {
        natural_pattern(shape, self.j)
    }

    /// Odd exactly when `j ≤ n` (natural grading of the natural module).
    pub fn parity(self, shape: AlgebraShape) -> Parity {
        if self.j <= shape.n() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Pattern of `|1_j)`.
pub fn natural_pattern(shape: AlgebraShape, j: usize) -> GZPattern {
    let r = shape.r();
    let rows: Vec<Vec<i64>> = (1..=r)
        .rev()
        .map(|len| {
            let mut row = vec![0; len];
            if len + j > r {
                row[0] = 1;
            }
            row
        })
        .collect();
    GZPattern::from_rows_unchecked(shape, &rows).expect("natural pattern has the right shape")
}

/// The natural module's highest weight `[1,0,…,0]`.
pub fn natural_weight(shape: AlgebraShape) -> HighestWeight {
    let mut mu = vec![0; shape.r()];
    mu[0] = 1;
    HighestWeight::new(shape, mu).expect("[1,0,...,0] is a highest weight")
}

/// Summands `V([μ]_{+k})` of `V([μ]) ⊗ V([1,0,…,0])`: every `k` for which the
/// raised weight is still admissible.
pub fn decompose_tensor(mu: &HighestWeight) -> Vec<(usize, HighestWeight)> {
    (1..=mu.shape().r())
        .filter_map(|k| mu.raised(k).map(|w| (k, w)))
        .collect()
}

/// Row-sum conditions under which a coefficient can be nonzero.
pub fn selection_rules(bra: &GZPattern, j: NaturalVector, ket: &GZPattern) -> bool {
    let r = bra.shape().r();
    if bra.shape() != ket.shape() || j.j == 0 || j.j > r {
        return false;
    }
    (1..=r).all(|p| {
        let shift = i64::from(p + j.j > r);
        ket.row_sum(p) == bra.row_sum(p) + shift
    })
}

/// Where the `(−1)^{Σθ}` prefactor of the `j ≤ n` coefficients reads its `θ`s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaPhase {
    /// `θ_{i,r−q}` of the ket, `q = 1..j`.
    Ket,
    /// `θ_{i,r−q}` of the bra, `q = 1..j`.
    Bra,
    /// `θ_{i,r−q}` of the bra, `q = 1..j−1`.
    BraAbove,
}

/// Index `k` with `ket` top row = `bra` top row + `e_k`, if any.
fn raised_index(upper: &[i64], lower: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, (a, b)) in upper.iter().zip(lower).enumerate() {
        match a - b {
            0 => {}
            1 if found.is_none() => found = Some(i + 1),
            _ => return None,
        }
    }
    found
}

/// The isoscalar keys of the coupling path from `bra` to `ket`, or `None` when
/// the coefficient vanishes for structural reasons.
pub fn coupling_path(bra: &GZPattern, j: NaturalVector, ket: &GZPattern) -> Option<Vec<IsoscalarKey>> {
    let r = bra.shape().r();
    if !selection_rules(bra, j, ket) {
        return None;
    }
    let mut keys = Vec::new();
    let mut level = r;
    let mut k = raised_index(ket.row(r), bra.row(r))?;
    loop {
        let jl = j.j + level - r;
        if jl == 1 {
            keys.push(IsoscalarKey::unchanged(level, k));
            let rest_equal = (1..level).all(|p| ket.row(p) == bra.row(p));
            return rest_equal.then_some(keys);
        }
        let q = raised_index(ket.row(level - 1), bra.row(level - 1))?;
        keys.push(IsoscalarKey::raised(level, k, q));
        level -= 1;
        k = q;
    }
}

pub(crate) fn cgc_with_phase(
    bra: &GZPattern,
    j: NaturalVector,
    ket: &GZPattern,
    grading: Grading,
    phase: ThetaPhase,
) -> Result<RadicalScalar> {
    let shape = bra.shape();
    if ket.shape() != shape {
        return Err(Error::Shape(format!("bra in {shape}, ket in {}", ket.shape())));
    }
    NaturalVector::new(shape, j.j)?;
    let Some(keys) = coupling_path(bra, j, ket) else {
        return Ok(RadicalScalar::zero());
    };
    let mut value = RadicalScalar::one();
    for key in keys {
        value = &value * &isoscalar_factor(bra, key)?;
        if value.is_zero() {
            return Ok(value);
        }
    }
    if j.j <= shape.n() {
        let (m, r) = (shape.m(), shape.r());
        let (source, last) = match phase {
            ThetaPhase::Ket => (ket, j.j),
            ThetaPhase::Bra => (bra, j.j),
            ThetaPhase::BraAbove => (bra, j.j - 1),
        };
        let theta: i64 = (1..=last)
            .flat_map(|q| (1..=m).map(move |i| (i, r - q)))
            .map(|(i, p)| source.theta(i, p))
            .sum();
        let xi = highest_weight_pattern(&bra.highest_weight()?).parity(grading);
        if (theta + i64::from(xi.is_odd())) % 2 == 1 {
            value = -value;
        }
    }
    Ok(value)
}

pub(crate) const DEFAULT_PHASE: ThetaPhase = ThetaPhase::BraAbove;

/// Clebsch-Gordan coefficient `(bra; |1_j) | ket)` with the first factor in
/// the natural grading.
pub fn cgc(bra: &GZPattern, j: NaturalVector, ket: &GZPattern) -> Result<RadicalScalar> {
    cgc_graded(bra, j, ket, Grading::Natural)
}

/// Same as [`cgc`] with an explicit grading for the first factor; this fixes
/// `ξ = (−1)^{deg}` of its highest-weight vector.
pub fn cgc_graded(bra: &GZPattern, j: NaturalVector, ket: &GZPattern, grading: Grading) -> Result<RadicalScalar> {
    cgc_with_phase(bra, j, ket, grading, DEFAULT_PHASE)
}
