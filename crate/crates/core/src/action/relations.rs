//! Exact check of the defining relations of `gl(m|n)` on a module.

use serde::Serialize;

use super::operators::{supercommutator, Representation, SparseOperator};
use crate::arith::{rational, RadicalScalar};
use crate::error::Result;
use crate::exec::Exec;
use crate::patterns::HighestWeight;
use crate::sparse::SparseMatrix;

/// Which group of relations a check belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationFamily {
    Kk,
    Hiej,
    Hifj,
    Eifj,
    Eifi,
    Enfn,
    Ee,
    Eee1,
    Eee2,
    Eeee,
    Ff,
    Fff1,
    Fff2,
    Ffff,
}

/// A nonzero entry of a residual matrix, located by basis index and pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub row_pattern: String,
    pub col_pattern: String,
    pub value: RadicalScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub family: RelationFamily,
    pub relation: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub highest_weight: Vec<i64>,
    pub m: usize,
    pub n: usize,
    pub dimension: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// One relation, stated as a residual that must vanish.
struct Spec {
    family: RelationFamily,
    label: String,
    kind: Kind,
}

enum Kind {
    /// `[x_a, x_b} − c·target` where `target` is a fixed sum of Cartan elements
    /// or raising/lowering generators.
    Bracket { a: Op, b: Op, rhs: Vec<(i64, Op)> },
    /// `Σ c·(product of generators)`.
    Words(Vec<(i64, Vec<Op>)>),
}

#[derive(Clone, Copy)]
enum Op {
    H(usize),
    E(usize),
    F(usize),
}

impl Op {
    fn get(self, rep: &Representation) -> &SparseOperator {
        match self {
            Op::H(k) => rep.h(k),
            Op::E(k) => rep.e(k),
            Op::F(k) => rep.f(k),
        }
    }

    fn raising(raise: bool, k: usize) -> Op {
        if raise {
            Op::E(k)
        } else {
            Op::F(k)
        }
    }
}

fn kron(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn specs(m: usize, n: usize) -> Vec<Spec> {
    use RelationFamily as R;
    let r = m + n;
    let mut out = Vec::new();
    let mut push = |family, label: String, kind| out.push(Spec { family, label, kind });

    for i in 1..=r {
        for j in i + 1..=r {
            push(
                R::Kk,
                format!("[h{i},h{j}]=0"),
                Kind::Bracket {
                    a: Op::H(i),
                    b: Op::H(j),
                    rhs: vec![],
                },
            );
        }
    }
    for i in 1..=r {
        for j in 1..r {
            let c = kron(i, j) - kron(i, j + 1);
            push(
                R::Hiej,
                format!("[h{i},e{j}]={c}e{j}"),
                Kind::Bracket {
                    a: Op::H(i),
                    b: Op::E(j),
                    rhs: vec![(c, Op::E(j))],
                },
            );
            push(
                R::Hifj,
                format!("[h{i},f{j}]={}f{j}", -c),
                Kind::Bracket {
                    a: Op::H(i),
                    b: Op::F(j),
                    rhs: vec![(-c, Op::F(j))],
                },
            );
        }
    }
    for i in 1..r {
        for j in (1..r).filter(|&j| j != i) {
            push(
                R::Eifj,
                format!("[e{i},f{j}]=0"),
                Kind::Bracket {
                    a: Op::E(i),
                    b: Op::F(j),
                    rhs: vec![],
                },
            );
        }
    }
    for i in (1..r).filter(|&i| i != m) {
        push(
            R::Eifi,
            format!("[e{i},f{i}]=h{i}-h{}", i + 1),
            Kind::Bracket {
                a: Op::E(i),
                b: Op::F(i),
                rhs: vec![(1, Op::H(i)), (-1, Op::H(i + 1))],
            },
        );
    }
    if n >= 1 {
        push(
            R::Enfn,
            format!("{{e{m},f{m}}}=h{m}+h{}", m + 1),
            Kind::Bracket {
                a: Op::E(m),
                b: Op::F(m),
                rhs: vec![(1, Op::H(m)), (1, Op::H(m + 1))],
            },
        );
    }

    for raise in [true, false] {
        let x = |k| Op::raising(raise, k);
        let s = if raise { "e" } else { "f" };
        let (ff, f1, f2, f4) = if raise {
            (R::Ee, R::Eee1, R::Eee2, R::Eeee)
        } else {
            (R::Ff, R::Fff1, R::Fff2, R::Ffff)
        };
        for i in 1..r {
            for j in i + 2..r {
                push(
                    ff,
                    format!("{s}{i}{s}{j}={s}{j}{s}{i}"),
                    Kind::Words(vec![(1, vec![x(i), x(j)]), (-1, vec![x(j), x(i)])]),
                );
            }
        }
        if n >= 1 {
            push(ff, format!("{s}{m}^2=0"), Kind::Words(vec![(1, vec![x(m), x(m)])]));
        }
        let serre1 = (1..m).chain(m + 1..r.saturating_sub(1)).filter(|&i| i + 1 < r);
        for i in serre1 {
            let j = i + 1;
            push(
                f1,
                format!("{s}{i}^2{s}{j}-2{s}{i}{s}{j}{s}{i}+{s}{j}{s}{i}^2=0"),
                Kind::Words(vec![
                    (1, vec![x(i), x(i), x(j)]),
                    (-2, vec![x(i), x(j), x(i)]),
                    (1, vec![x(j), x(i), x(i)]),
                ]),
            );
        }
        let serre2 = (1..m.saturating_sub(1))
            .chain(m..r.saturating_sub(1))
            .filter(|&i| i + 1 < r);
        for i in serre2 {
            let j = i + 1;
            push(
                f2,
                format!("{s}{j}^2{s}{i}-2{s}{j}{s}{i}{s}{j}+{s}{i}{s}{j}^2=0"),
                Kind::Words(vec![
                    (1, vec![x(j), x(j), x(i)]),
                    (-2, vec![x(j), x(i), x(j)]),
                    (1, vec![x(i), x(j), x(j)]),
                ]),
            );
        }
        if m >= 2 && m + 1 < r {
            let (a, b, c) = (x(m - 1), x(m), x(m + 1));
            push(
                f4,
                format!("quartic {s}{}{s}{m}{s}{}", m - 1, m + 1),
                Kind::Words(vec![
                    (1, vec![b, a, b, c]),
                    (1, vec![a, b, c, b]),
                    (1, vec![b, c, b, a]),
                    (1, vec![c, b, a, b]),
                    (-2, vec![b, a, c, b]),
                ]),
            );
        }
    }
    out
}

fn residual(rep: &Representation, kind: &Kind, exec: Exec) -> SparseMatrix {
    let dim = rep.dim();
    match kind {
        Kind::Bracket { a, b, rhs } => {
            let mut acc = supercommutator(a.get(rep), b.get(rep), exec).matrix;
            for (c, op) in rhs {
                acc = acc.sub(&op.get(rep).matrix.scale(&rational(*c)));
            }
            acc
        }
        Kind::Words(words) => words.iter().fold(SparseMatrix::zeros(dim, dim), |acc, (c, word)| {
            let mats: Vec<&SparseMatrix> = word.iter().map(|op| &op.get(rep).matrix).collect();
            acc.add(&SparseMatrix::chain(&mats, exec).scale(&rational(*c)))
        }),
    }
}

/// Evaluates every relation on the given matrices.
pub fn verify_representation(rep: &Representation, exec: Exec) -> RelationReport {
    let shape = rep.shape();
    let specs = specs(shape.m(), shape.n());
    let checks = exec.map(&specs, |spec| {
        let res = residual(rep, &spec.kind, Exec::Sequential);
        let witness = res.first_nonzero().map(|(row, col, value)| Witness {
            row,
            col,
            row_pattern: rep.basis().pattern(row).to_string(),
            col_pattern: rep.basis().pattern(col).to_string(),
            value,
        });
        RelationCheck {
            family: spec.family,
            relation: spec.label.clone(),
            passed: witness.is_none(),
            witness,
        }
    });
    RelationReport {
        highest_weight: rep.basis().highest_weight().components().to_vec(),
        m: shape.m(),
        n: shape.n(),
        dimension: rep.dim(),
        checks,
    }
}

/// Builds `V([μ])` and checks all defining relations exactly.
pub fn verify_defining_relations(mu: &HighestWeight) -> Result<RelationReport> {
    verify_defining_relations_with(mu, Exec::default())
}

pub fn verify_defining_relations_with(mu: &HighestWeight, exec: Exec) -> Result<RelationReport> {
    let rep = Representation::with_exec(mu, exec)?;
    Ok(verify_representation(&rep, exec))
}
