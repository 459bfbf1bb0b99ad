//! JSON documents written by the subcommands. Field order is the key order
//! on disk; big integers are decimal strings.

use serde::{Deserialize, Serialize};

use glmn::action::{Generator, Representation};
use glmn::arith::RadicalScalar;
use glmn::cgc::CgcTable;
use glmn::characters::LaurentPolynomial;
use glmn::patterns::{
    enumerate_patterns, is_typical, partition_from_weight, pattern_parity, pattern_weight, GZPattern, Grading,
    HighestWeight, Parity,
};
use glmn::sparse::SparseMatrix;

/// The module a document describes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Module {
    pub m: usize,
    pub n: usize,
    pub highest_weight: Vec<i64>,
    pub partition: Vec<usize>,
}

impl Module {
    pub fn of(mu: &HighestWeight) -> Self {
        Self {
            m: mu.shape().m(),
            n: mu.shape().n(),
            highest_weight: mu.components().to_vec(),
            partition: partition_from_weight(mu).parts().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRecord {
    pub index: usize,
    pub rows: Vec<Vec<i64>>,
    pub weight: Vec<i64>,
    pub parity: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternsDoc {
    pub module: Module,
    pub grading: Grading,
    pub dimension: usize,
    pub patterns: Vec<PatternRecord>,
}

impl PatternsDoc {
    pub fn build(mu: &HighestWeight, grading: Grading) -> Self {
        let patterns: Vec<PatternRecord> = enumerate_patterns(mu)
            .iter()
            .enumerate()
            .map(|(index, p)| PatternRecord {
                index,
                rows: p.rows(),
                weight: pattern_weight(p).components().to_vec(),
                parity: pattern_parity(p, grading),
            })
            .collect();
        Self {
            module: Module::of(mu),
            grading,
            dimension: patterns.len(),
            patterns,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub exponents: Vec<i64>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterDoc {
    pub module: Module,
    pub dimension: String,
    pub terms: Vec<CharacterTerm>,
}

impl CharacterDoc {
    pub fn build(mu: &HighestWeight, chi: &LaurentPolynomial) -> Self {
        Self {
            module: Module::of(mu),
            dimension: chi.at_ones().to_string(),
            terms: chi
                .terms()
                .map(|(e, c)| CharacterTerm {
                    exponents: e.clone(),
                    coefficient: c.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchComponent {
    pub partition: Vec<usize>,
    pub highest_weight: Vec<i64>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDoc {
    pub module: Module,
    /// `[m', n']` of the subalgebra.
    pub subalgebra: [usize; 2],
    pub components: Vec<BranchComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub value: RadicalScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub generator: String,
    pub parity: Parity,
    pub entries: Vec<MatrixEntry>,
}

impl GeneratorDoc {
    /// The matrix on a basis of size `dim`.
    pub fn to_matrix(&self, dim: usize) -> SparseMatrix {
        let mut cols = vec![Vec::new(); dim];
        for e in &self.entries {
            cols[e.col].push((e.row, e.value.clone()));
        }
        SparseMatrix::from_columns(dim, cols)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatricesDoc {
    pub module: Module,
    pub grading: Grading,
    pub basis: Vec<Vec<Vec<i64>>>,
    pub generators: Vec<GeneratorDoc>,
}

impl MatricesDoc {
    pub fn build(rep: &Representation, grading: Grading, generators: &[Generator]) -> glmn::Result<Self> {
        let generators = generators
            .iter()
            .map(|&g| {
                let op = rep.get(g)?;
                Ok(GeneratorDoc {
                    generator: g.to_string(),
                    parity: op.parity,
                    entries: op
                        .matrix
                        .triplets()
                        .into_iter()
                        .map(|t| MatrixEntry {
                            row: t.row,
                            col: t.col,
                            value: t.value,
                        })
                        .collect(),
                })
            })
            .collect::<glmn::Result<_>>()?;
        Ok(Self {
            module: Module::of(rep.basis().highest_weight()),
            grading,
            basis: rep.basis().patterns().iter().map(GZPattern::rows).collect(),
            generators,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgcEntryDoc {
    pub bra: Vec<Vec<i64>>,
    pub j: usize,
    pub ket: Vec<Vec<i64>>,
    pub value: RadicalScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgcBlockDoc {
    pub k: usize,
    pub highest_weight: Vec<i64>,
    pub dimension: usize,
    pub entries: Vec<CgcEntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgcDoc {
    pub module: Module,
    pub grading: Grading,
    pub product_dimension: usize,
    pub blocks: Vec<CgcBlockDoc>,
}

impl CgcDoc {
    /// Every block, or only `V([μ]_{+k})` when `only` is set.
    pub fn build(table: &CgcTable, only: Option<usize>) -> Self {
        let blocks = table
            .blocks
            .iter()
            .filter(|b| only.is_none_or(|k| b.k == k))
            .map(|b| CgcBlockDoc {
                k: b.k,
                highest_weight: b.weight.components().to_vec(),
                dimension: b.kets.len(),
                entries: table
                    .entries(b)
                    .into_iter()
                    .map(|e| CgcEntryDoc {
                        bra: e.bra.rows(),
                        j: e.j,
                        ket: e.ket.rows(),
                        value: e.value,
                    })
                    .collect(),
            })
            .collect();
        Self {
            module: Module::of(&table.mu),
            grading: table.grading,
            product_dimension: table.product_dim(),
            blocks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypicalityDoc {
    pub module: Module,
    pub labels: Vec<i64>,
    pub typical: bool,
    pub atypical_roots: Vec<[usize; 2]>,
}

impl TypicalityDoc {
    pub fn build(mu: &HighestWeight) -> Self {
        let t = is_typical(mu);
        Self {
            module: Module::of(mu),
            labels: (1..=mu.shape().r()).map(|i| mu.label(i)).collect(),
            typical: t.typical,
            atypical_roots: t.atypical_roots.into_iter().map(|(i, p)| [i, p]).collect(),
        }
    }
}
