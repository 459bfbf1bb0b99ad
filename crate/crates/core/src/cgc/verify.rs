//! Unitarity and equivariance checks for a coefficient table.

use serde::Serialize;

use super::table::build_table;
use super::{natural_pattern, natural_weight, CgcTable, NaturalVector, ThetaPhase};
use crate::action::{Generator, Representation, Witness};
use crate::arith::RadicalScalar;
use crate::error::Result;
use crate::exec::Exec;
use crate::patterns::{Grading, HighestWeight, Parity};
use crate::sparse::SparseMatrix;

/// How a generator acts on the tensor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoproductRule {
    /// `g(x⊗y) = gx⊗y + (−1)^{deg g · deg x} x⊗gy`.
    Graded,
    /// The same without the sign; wrong for superalgebras, kept for ablation.
    Ungraded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub generator: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Grading that the table induces on one summand, relative to that
/// summand's natural grading; `None` if the images are not homogeneous.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockGrading {
    pub k: usize,
    pub weight: Vec<i64>,
    pub grading: Option<Grading>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub highest_weight: Vec<i64>,
    pub m: usize,
    pub n: usize,
    pub grading: Grading,
    pub coproduct: CoproductRule,
    pub product_dimension: usize,
    pub dimension_balance: bool,
    pub orthogonal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthogonality_witness: Option<Witness>,
    pub generators: Vec<GeneratorCheck>,
    pub block_gradings: Vec<BlockGrading>,
    /// Where the `θ`s of the `j ≤ n` sign prefactor are read.
    pub theta_phase: ThetaPhase,
    /// Whether reading those `θ`s from the bra instead would also pass.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bra_theta_phase_equivariant: Option<bool>,
}

impl EquivarianceReport {
    pub fn all_passed(&self) -> bool {
        self.dimension_balance
            && self.orthogonal
            && self.generators.iter().all(|g| g.passed)
            && self.block_gradings.iter().all(|b| b.grading.is_some())
    }
}

fn witness(table: &CgcTable, m: &SparseMatrix, col_label: impl Fn(usize) -> String) -> Option<Witness> {
    m.first_nonzero().map(|(row, col, value)| {
        let (b, j) = table.product_pair(row);
        Witness {
            row,
            col,
            row_pattern: format!("{} x |1_{j})", table.bras.pattern(b)),
            col_pattern: col_label(col),
            value,
        }
    })
}

/// `Δ(g)` on the product basis.
fn coproduct(
    table: &CgcTable,
    left: &Representation,
    right: &Representation,
    right_index: &[usize],
    g: Generator,
    rule: CoproductRule,
) -> Result<SparseMatrix> {
    let r = table.r();
    let shape = table.mu.shape();
    let a = &left.get(g)?.matrix;
    let b = &right.get(g)?.matrix;
    // position in the natural basis -> j
    let mut j_of = vec![0; r];
    for (j0, &pos) in right_index.iter().enumerate() {
        j_of[pos] = j0 + 1;
    }
    let odd_g = g.parity(shape) == Parity::Odd;
    let cols = (0..table.product_dim())
        .map(|idx| {
            let (x, j) = table.product_pair(idx);
            let mut col: Vec<(usize, RadicalScalar)> = a
                .column(x)
                .iter()
                .map(|(x2, v)| (table.product_index(*x2, j), v.clone()))
                .collect();
            let flip = rule == CoproductRule::Graded && odd_g && table.bras.pattern(x).parity(table.grading).is_odd();
            for (y2, v) in b.column(right_index[j - 1]) {
                let v = if flip { -v } else { v.clone() };
                col.push((table.product_index(x, j_of[*y2]), v));
            }
            col
        })
        .collect();
    Ok(SparseMatrix::from_columns(table.product_dim(), cols))
}

/// Checks a finished table.
pub fn verify_table(table: &CgcTable, rule: CoproductRule, exec: Exec) -> Result<EquivarianceReport> {
    let shape = table.mu.shape();
    let left = Representation::from_basis(table.bras.clone(), exec)?;
    let right = Representation::with_exec(&natural_weight(shape), exec)?;
    let right_index: Vec<usize> = NaturalVector::all(shape)
        .into_iter()
        .map(|v| {
            right
                .basis()
                .index_of(&natural_pattern(shape, v.j))
                .expect("natural pattern in basis")
        })
        .collect();
    let summands: Vec<Representation> = table
        .blocks
        .iter()
        .map(|b| Representation::from_basis(b.kets.clone(), exec))
        .collect::<Result<_>>()?;
    let offsets: Vec<usize> = table
        .blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.kets.len();
            Some(o)
        })
        .collect();
    let coupled_dim: usize = table.blocks.iter().map(|b| b.kets.len()).sum();
    let ket_label = |col: usize| {
        let bi = offsets.partition_point(|&o| o <= col) - 1;
        let blk = &table.blocks[bi];
        format!("k={} {}", blk.k, blk.kets.pattern(col - offsets[bi]))
    };

    let t = table.stacked();
    let square = coupled_dim == table.product_dim();
    let (orthogonal, orthogonality_witness) = if square {
        let gram = t.transpose().mul(&t, exec).sub(&SparseMatrix::identity(coupled_dim));
        let w = gram.first_nonzero().map(|(row, col, value)| Witness {
            row,
            col,
            row_pattern: ket_label(row),
            col_pattern: ket_label(col),
            value,
        });
        (w.is_none(), w)
    } else {
        (false, None)
    };

    let gens = Generator::all(shape);
    let generators = exec.try_map(&gens, |&g| -> Result<GeneratorCheck> {
        let delta = coproduct(table, &left, &right, &right_index, g, rule)?;
        let mut cols = Vec::with_capacity(coupled_dim);
        for (rep, &off) in summands.iter().zip(&offsets) {
            let m = &rep.get(g)?.matrix;
            for c in 0..m.ncols() {
                cols.push(m.column(c).iter().map(|(i, v)| (i + off, v.clone())).collect());
            }
        }
        let direct = SparseMatrix::from_columns(coupled_dim, cols);
        let lhs = delta.mul(&t, Exec::Sequential);
        let rhs = t.mul(&direct, Exec::Sequential);
        let w = witness(table, &lhs.sub(&rhs), ket_label);
        Ok(GeneratorCheck {
            generator: g.to_string(),
            passed: w.is_none(),
            witness: w,
        })
    })?;

    let block_gradings = table
        .blocks
        .iter()
        .map(|blk| {
            let mut seen: Option<bool> = None;
            let mut consistent = true;
            for c in 0..blk.matrix.ncols() {
                let own = blk.kets.pattern(c).parity(Grading::Natural);
                for (row, _) in blk.matrix.column(c) {
                    let (b, j) = table.product_pair(*row);
                    let p = table.bras.pattern(b).parity(table.grading);
                    let p = p + NaturalVector { j }.parity(shape);
                    let same = p == own;
                    match seen {
                        None => seen = Some(same),
                        Some(s) if s != same => consistent = false,
                        _ => {}
                    }
                }
            }
            BlockGrading {
                k: blk.k,
                weight: blk.weight.components().to_vec(),
                grading: match (consistent, seen) {
                    (true, Some(true)) => Some(Grading::Natural),
                    (true, Some(false)) => Some(Grading::Opposite),
                    _ => None,
                },
            }
        })
        .collect();

    Ok(EquivarianceReport {
        highest_weight: table.mu.components().to_vec(),
        m: shape.m(),
        n: shape.n(),
        grading: table.grading,
        coproduct: rule,
        product_dimension: table.product_dim(),
        dimension_balance: square,
        orthogonal,
        orthogonality_witness,
        generators,
        block_gradings,
        theta_phase: super::DEFAULT_PHASE,
        bra_theta_phase_equivariant: None,
    })
}

/// Builds the table for `μ` and checks orthogonality, equivariance under the
/// graded coproduct, and homogeneity of the induced gradings.
pub fn verify_equivariance(mu: &HighestWeight) -> Result<EquivarianceReport> {
    verify_equivariance_with(mu, Grading::Natural, Exec::default())
}

pub fn verify_equivariance_with(mu: &HighestWeight, grading: Grading, exec: Exec) -> Result<EquivarianceReport> {
    let table = build_table(mu, grading, super::DEFAULT_PHASE, exec)?;
    let mut report = verify_table(&table, CoproductRule::Graded, exec)?;
    if mu.shape().n() > 0 {
        let alt = build_table(mu, grading, ThetaPhase::Bra, exec)?;
        let alt_report = verify_table(&alt, CoproductRule::Graded, exec)?;
        report.bra_theta_phase_equivariant =
            Some(alt_report.generators.iter().all(|g| g.passed) && alt_report.orthogonal);
    }
    Ok(report)
}
