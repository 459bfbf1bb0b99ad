//! Full coefficient tables, one block per summand.

use serde::Serialize;

use super::{cgc_with_phase, decompose_tensor, NaturalVector, ThetaPhase};
use crate::action::Basis;
use crate::arith::RadicalScalar;
use crate::error::Result;
use crate::exec::Exec;
use crate::patterns::{GZPattern, Grading, HighestWeight};
use crate::sparse::SparseMatrix;

/// One nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CgcEntry {
    pub bra: GZPattern,
    pub j: usize,
    pub ket: GZPattern,
    pub value: RadicalScalar,
}

/// Coefficients coupling into the summand `V([μ]_{+k})`.
///
/// `matrix` has one row per product vector `(bra, j)`, indexed
/// `bra_index · r + (j − 1)`, and one column per basis pattern of the summand.
#[derive(Clone, Debug)]
pub struct CgcBlock {
    pub k: usize,
    pub weight: HighestWeight,
    pub kets: Basis,
    pub matrix: SparseMatrix,
}

#[derive(Clone, Debug)]
pub struct CgcTable {
    pub mu: HighestWeight,
    pub grading: Grading,
    pub bras: Basis,
    pub blocks: Vec<CgcBlock>,
}

impl CgcTable {
    pub fn r(&self) -> usize {
        self.mu.shape().r()
    }

    /// Size of the product space, `dim V([μ]) · (m + n)`.
    pub fn product_dim(&self) -> usize {
        self.bras.len() * self.r()
    }

    pub fn product_index(&self, bra: usize, j: usize) -> usize {
        bra * self.r() + (j - 1)
    }

    /// `(bra index, j)` for a product index.
    pub fn product_pair(&self, idx: usize) -> (usize, usize) {
        (idx / self.r(), idx % self.r() + 1)
    }

    /// All blocks side by side: the square change-of-basis matrix whose
    /// columns are the coupled vectors in the product basis.
    pub fn stacked(&self) -> SparseMatrix {
        let cols = self
            .blocks
            .iter()
            .flat_map(|b| (0..b.matrix.ncols()).map(move |c| b.matrix.column(c).to_vec()))
            .collect();
        SparseMatrix::from_columns(self.product_dim(), cols)
    }

    /// Nonzero entries of one block in (ket, bra, j) order.
    pub fn entries(&self, block: &CgcBlock) -> Vec<CgcEntry> {
        (0..block.matrix.ncols())
            .flat_map(|c| {
                block.matrix.column(c).iter().map(move |(row, v)| {
                    let (b, j) = self.product_pair(*row);
                    CgcEntry {
                        bra: self.bras.pattern(b).clone(),
                        j,
                        ket: block.kets.pattern(c).clone(),
                        value: v.clone(),
                    }
                })
            })
            .collect()
    }
}

/// Bras that can couple with `|1_j)` to `ket`, following the coupling path
/// level by level.
fn candidate_bras(mu: &HighestWeight, ket: &GZPattern, j: usize) -> Vec<GZPattern> {
    let shape = mu.shape();
    let r = shape.r();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = vec![mu.components().to_vec()];
    fn descend(ket: &GZPattern, r: usize, j: usize, level: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GZPattern>) {
        if j + level == r + 1 {
            let mut full = rows.clone();
            full.extend((1..level).rev().map(|p| ket.row(p).to_vec()));
            if let Ok(p) = GZPattern::from_rows_unchecked(ket.shape(), &full) {
                if p.is_valid() {
                    out.push(p);
                }
            }
            return;
        }
        let below = ket.row(level - 1);
        for q in 0..below.len() {
            let mut row = below.to_vec();
            row[q] -= 1;
            rows.push(row);
            descend(ket, r, j, level - 1, rows, out);
            rows.pop();
        }
    }
    descend(ket, r, j, r, &mut rows, &mut out);
    out
}

pub(crate) fn build_table(mu: &HighestWeight, grading: Grading, phase: ThetaPhase, exec: Exec) -> Result<CgcTable> {
    let shape = mu.shape();
    let r = shape.r();
    let bras = Basis::with_exec(mu, exec);
    let mut blocks = Vec::new();
    for (k, weight) in decompose_tensor(mu) {
        let kets = Basis::with_exec(&weight, exec);
        let cols = exec.try_map(kets.patterns(), |ket| -> Result<Vec<_>> {
            let mut col = Vec::new();
            for j in 1..=r {
                for bra in candidate_bras(mu, ket, j) {
                    let v = cgc_with_phase(&bra, NaturalVector { j }, ket, grading, phase)?;
                    if !v.is_zero() {
                        let b = bras.index_of(&bra).expect("valid bra lies in the basis");
                        col.push((b * r + j - 1, v));
                    }
                }
            }
            Ok(col)
        })?;
        let matrix = SparseMatrix::from_columns(bras.len() * r, cols);
        blocks.push(CgcBlock {
            k,
            weight,
            kets,
            matrix,
        });
    }
    Ok(CgcTable {
        mu: mu.clone(),
        grading,
        bras,
        blocks,
    })
}

/// Complete table with the first factor in the natural grading.
pub fn cgc_table(mu: &HighestWeight) -> Result<CgcTable> {
    cgc_table_with(mu, Grading::Natural, Exec::default())
}

pub fn cgc_table_with(mu: &HighestWeight, grading: Grading, exec: Exec) -> Result<CgcTable> {
    build_table(mu, grading, super::DEFAULT_PHASE, exec)
}
