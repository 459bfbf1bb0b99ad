//! Acceptance criteria as exact, pass/fail checks over finite sweeps.
//!
//! Criteria 1 to 6 share one sweep of modules, 7 and 9 sweep coupling
//! tables, and 8 evaluates the two worked `gl(2|3)` coefficients on a grid.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use glmn::action::{verify_representation, Representation};
use glmn::cgc::{cgc_table_with, verify_table, CoproductRule};
use glmn::characters::{branch_classical, branch_super, super_schur_character, LaurentPolynomial};
use glmn::patterns::{
    enumerate_patterns, is_typical, pattern_weight, weight_from_partition, AlgebraShape, GZPattern, Grading,
    HighestWeight, Partition,
};
use glmn::sparse::SparseMatrix;
use glmn::Exec;

use crate::{closed_forms, oracle, tableaux};

/// Sweep bounds.
#[derive(Clone, Debug)]
pub struct Scope {
    pub sweep_max_r: usize,
    pub sweep_max_size: usize,
    pub sweep_max_dim: usize,
    pub cgc_max_r: usize,
    pub cgc_max_size: usize,
    /// Bound on `dim · (m + n)` for coupling tables.
    pub cgc_max_work: usize,
    pub oracle_shapes: Vec<(usize, usize)>,
    pub oracle_max_size: usize,
    pub min_substitutions: usize,
}

impl Scope {
    /// The bounds the criteria are stated at.
    pub fn full() -> Self {
        Self {
            sweep_max_r: 5,
            sweep_max_size: 6,
            sweep_max_dim: 2000,
            cgc_max_r: 4,
            cgc_max_size: 4,
            cgc_max_work: 4000,
            oracle_shapes: vec![(1, 1), (1, 2), (2, 1), (2, 2)],
            oracle_max_size: 3,
            min_substitutions: 20,
        }
    }
}

/// Result of one criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {:>2} {} ({} cases", self.id, self.title, self.cases)?;
        match self.failures.first() {
            Some(first) => write!(f, ", {} failed; first: {first})", self.failures.len()),
            None => write!(f, ")"),
        }
    }
}

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, label: &str, result: Option<Result<(), String>>) {
        if let Some(r) = result {
            self.cases += 1;
            if let Err(e) = r {
                self.failures.push(format!("{label}: {e}"));
            }
        }
    }

    fn finish(self, id: u32, title: &'static str) -> Outcome {
        Outcome {
            id,
            title,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hook_partitions(m: usize, n: usize, max_size: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(Partition::all_of_size)
        .filter(|p| p.in_hook(m, n))
        .collect()
}

struct Case {
    shape: AlgebraShape,
    lambda: Partition,
    mu: HighestWeight,
}

impl Case {
    fn label(&self) -> String {
        format!("gl({}|{}) {:?}", self.shape.m(), self.shape.n(), self.lambda.parts())
    }
}

fn sweep(max_r: usize, max_size: usize, keep: impl Fn(&AlgebraShape, usize) -> bool) -> Vec<Case> {
    let mut out = Vec::new();
    for shape in AlgebraShape::all_up_to(max_r) {
        for lambda in hook_partitions(shape.m(), shape.n(), max_size) {
            let mu = weight_from_partition(&lambda, shape).expect("hook partition");
            if keep(&shape, enumerate_patterns(&mu).len()) {
                out.push(Case { shape, lambda, mu });
            }
        }
    }
    out
}

/// Per-case verdicts for criteria 1 to 6; `None` where a criterion does not
/// apply.
type SweepVerdicts = [Option<Result<(), String>>; 6];

fn sweep_case(case: &Case) -> SweepVerdicts {
    let patterns = enumerate_patterns(&case.mu);
    let rep = match Representation::with_exec(&case.mu, Exec::Sequential) {
        Ok(rep) => rep,
        Err(e) => return std::array::from_fn(|_| Some(Err(e.to_string()))),
    };
    [
        Some(relations(&rep)),
        Some(transposes(&rep)),
        Some(dimensions(case, &patterns)),
        Some(kac(case, &patterns)),
        Some(character_identity(case, &patterns)),
        branching(case, &patterns),
    ]
}

fn relations(rep: &Representation) -> Result<(), String> {
    let report = verify_representation(rep, Exec::Sequential);
    let first = report.failures().next().map(|f| format!("{f:?}"));
    first.map_or(Ok(()), Err)
}

fn transposes(rep: &Representation) -> Result<(), String> {
    for k in 1..rep.shape().r() {
        check(rep.f(k).matrix == rep.e(k).matrix.transpose(), || {
            format!("f{k} != e{k}^T")
        })?;
    }
    Ok(())
}

fn dimensions(case: &Case, patterns: &[GZPattern]) -> Result<(), String> {
    let count = patterns.len();
    let tableaux = tableaux::super_tableau_count(case.lambda.parts(), case.shape.m(), case.shape.n());
    let chi = super_schur_character(&case.lambda, case.shape).map_err(|e| e.to_string())?;
    let at_ones = chi.at_ones();
    check(count as u64 == tableaux && BigInt::from(count) == at_ones, || {
        format!("patterns {count}, tableaux {tableaux}, character {at_ones}")
    })
}

fn kac(case: &Case, patterns: &[GZPattern]) -> Result<(), String> {
    let (m, n) = (case.shape.m(), case.shape.n());
    let (even, odd) = case.mu.even_parts();
    let classical = |k: usize, w: Vec<i64>| -> Result<usize, String> {
        if k == 0 {
            return Ok(1);
        }
        let shape = AlgebraShape::new(k, 0).map_err(|e| e.to_string())?;
        let w = HighestWeight::new(shape, w).map_err(|e| e.to_string())?;
        Ok(enumerate_patterns(&w).len())
    };
    let kac = (1usize << (m * n)) * classical(m, even)? * classical(n, odd)?;
    let count = patterns.len();
    if is_typical(&case.mu).typical {
        check(count == kac, || {
            format!("typical: {count} patterns, Kac dimension {kac}")
        })
    } else {
        check(count < kac, || {
            format!("atypical: {count} patterns, Kac dimension {kac}")
        })
    }
}

fn character_identity(case: &Case, patterns: &[GZPattern]) -> Result<(), String> {
    let mut sum = LaurentPolynomial::zero(case.shape.r());
    for p in patterns {
        sum.add_term(pattern_weight(p).components().to_vec(), BigInt::from(1));
    }
    let chi = super_schur_character(&case.lambda, case.shape).map_err(|e| e.to_string())?;
    check(sum == chi, || {
        "pattern sum differs from the supersymmetric Schur polynomial".into()
    })
}

/// Subshapes of `λ` reachable by removing a vertical strip (`super`) or a
/// horizontal strip (classical), inside the smaller hook.
fn strips(lambda: &Partition, m: usize, n: usize, vertical: bool) -> Vec<Partition> {
    let mut out: Vec<Partition> = lambda
        .subpartitions()
        .into_iter()
        .filter(|s| {
            (1..=lambda.len()).all(|i| {
                if vertical {
                    lambda.part(i) - s.part(i) <= 1
                } else {
                    s.part(i) >= lambda.part(i + 1)
                }
            })
        })
        .filter(|s| s.in_hook(m, n))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn branching(case: &Case, patterns: &[GZPattern]) -> Option<Result<(), String>> {
    let (m, n, r) = (case.shape.m(), case.shape.n(), case.shape.r());
    if r < 2 {
        return None;
    }
    let low = if n > 0 {
        AlgebraShape::new(m, n - 1)
    } else {
        AlgebraShape::new(m - 1, 0)
    };
    Some((|| {
        let low = low.map_err(|e| e.to_string())?;
        let mut groups: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for p in patterns {
            *groups.entry(p.row(r - 1).to_vec()).or_default() += 1;
        }
        let mut from_patterns = Vec::new();
        for (row, size) in groups {
            let nu = HighestWeight::new(low, row.clone()).map_err(|e| format!("row {row:?}: {e}"))?;
            if n > 0 {
                let ok = (1..=m).all(|i| matches!(case.mu.get(i) - nu.get(i), 0 | 1));
                check(ok, || format!("row {row:?} is not an admissible subweight"))?;
            }
            let sub = enumerate_patterns(&nu).len();
            check(size == sub, || {
                format!("row {row:?}: {size} patterns, submodule dimension {sub}")
            })?;
            from_patterns.push(glmn::patterns::partition_from_weight(&nu));
        }
        from_patterns.sort_by(|a, b| b.cmp(a));
        let (rule, direct) = if n > 0 {
            (
                strips(&case.lambda, m, n - 1, true),
                branch_super(&case.lambda, case.shape).map_err(|e| e.to_string())?,
            )
        } else {
            let mut d: Vec<Partition> = branch_classical(&case.lambda)
                .into_iter()
                .filter(|s| s.len() < m)
                .collect();
            d.sort_by(|a, b| b.cmp(a));
            (strips(&case.lambda, m - 1, 0, false), d)
        };
        check(from_patterns == rule, || {
            format!("patterns give {from_patterns:?}, strip rule {rule:?}")
        })?;
        check(direct == rule, || {
            format!("branching gives {direct:?}, strip rule {rule:?}")
        })
    })())
}

fn orthogonal(s: &SparseMatrix) -> bool {
    let id = SparseMatrix::identity(s.ncols());
    s.nrows() == s.ncols()
        && s.transpose().mul(s, Exec::Sequential) == id
        && s.mul(&s.transpose(), Exec::Sequential) == id
}

fn cgc_case(mu: &HighestWeight, grading: Grading) -> Result<(), String> {
    let table = cgc_table_with(mu, grading, Exec::Sequential).map_err(|e| e.to_string())?;
    check(orthogonal(&table.stacked()), || "table is not orthogonal".into())?;
    let report = verify_table(&table, CoproductRule::Graded, Exec::Sequential).map_err(|e| e.to_string())?;
    match report.generators.iter().find(|g| !g.passed) {
        Some(g) => Err(format!("{} fails: {:?}", g.generator, g.witness)),
        None => check(report.all_passed(), || format!("{report:?}")),
    }
}

const GRADINGS: [Grading; 2] = [Grading::Natural, Grading::Opposite];

fn graded_label(case: &Case, grading: Grading) -> String {
    format!("{} {grading:?}", case.label())
}

/// Runs every criterion, handing each outcome to `report` as soon as it is
/// known. Cases are spread over `exec`; the output does not depend on it.
pub fn run(scope: &Scope, exec: Exec, mut report: impl FnMut(&Outcome)) -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut emit = |o: Outcome, out: &mut Vec<Outcome>| {
        report(&o);
        out.push(o);
    };

    let cases = sweep(scope.sweep_max_r, scope.sweep_max_size, |_, dim| {
        dim <= scope.sweep_max_dim
    });
    let verdicts = exec.map(&cases, sweep_case);
    let titles = [
        "defining relations vanish exactly",
        "f_k equals the transpose of e_k",
        "pattern count = tableau count = character at ones",
        "Kac dimension for typical, smaller for atypical",
        "pattern weights sum to the supersymmetric Schur polynomial",
        "branching by the second row follows the strip rule",
    ];
    let mut tallies: Vec<Tally> = (0..6).map(|_| Tally::new()).collect();
    for (case, v) in cases.iter().zip(verdicts) {
        for (tally, verdict) in tallies.iter_mut().zip(v) {
            tally.record(&case.label(), verdict);
        }
    }
    for (i, (tally, title)) in tallies.into_iter().zip(titles).enumerate() {
        emit(tally.finish(i as u32 + 1, title), &mut out);
    }

    let tables: Vec<(Case, Grading)> = sweep(scope.cgc_max_r, scope.cgc_max_size, |shape, dim| {
        dim * shape.r() <= scope.cgc_max_work
    })
    .into_iter()
    .flat_map(|c| {
        GRADINGS.map(|g| {
            (
                Case {
                    shape: c.shape,
                    lambda: c.lambda.clone(),
                    mu: c.mu.clone(),
                },
                g,
            )
        })
    })
    .collect();
    let results = exec.map(&tables, |(case, g)| cgc_case(&case.mu, *g));
    let mut tally = Tally::new();
    for ((case, g), r) in tables.iter().zip(results) {
        tally.record(&graded_label(case, *g), Some(r));
    }
    emit(
        tally.finish(7, "coupling tables are orthogonal and equivariant"),
        &mut out,
    );

    let subs = closed_forms::substitutions();
    let mut tally = Tally::new();
    let mut counts = [0usize; 3];
    let evaluations: Vec<[Option<(_, _)>; 3]> = exec.map(&subs, |&s| {
        [
            closed_forms::odd_chain(s, Grading::Natural),
            closed_forms::odd_chain(s, Grading::Opposite),
            closed_forms::even_chain(s),
        ]
    });
    for (s, evals) in subs.iter().zip(evaluations) {
        for (count, e) in counts.iter_mut().zip(evals) {
            if let Some((got, expected)) = e {
                *count += 1;
                tally.record(
                    &format!("{s:?}"),
                    Some(check(got == expected, || format!("{got} vs {expected}"))),
                );
            }
        }
    }
    for (count, which) in counts.iter().zip(["odd natural", "odd opposite", "even"]) {
        if *count < scope.min_substitutions {
            tally
                .failures
                .push(format!("{which}: only {count} admissible substitutions"));
        }
    }
    emit(
        tally.finish(8, "worked gl(2|3) coefficients match their closed forms"),
        &mut out,
    );

    let oracle_cases: Vec<(Case, Grading)> = scope
        .oracle_shapes
        .iter()
        .flat_map(|&(m, n)| {
            let shape = AlgebraShape::new(m, n).expect("oracle shape");
            hook_partitions(m, n, scope.oracle_max_size)
                .into_iter()
                .flat_map(move |lambda| {
                    let mu = weight_from_partition(&lambda, shape).expect("hook partition");
                    GRADINGS.map(|g| {
                        (
                            Case {
                                shape,
                                lambda: lambda.clone(),
                                mu: mu.clone(),
                            },
                            g,
                        )
                    })
                })
        })
        .collect();
    let results = exec.map(&oracle_cases, |(case, g)| {
        let table = cgc_table_with(&case.mu, *g, Exec::Sequential).map_err(|e| e.to_string())?;
        oracle::compare(&oracle::build(&case.mu, *g), &table)
    });
    let mut tally = Tally::new();
    for ((case, g), r) in oracle_cases.iter().zip(results) {
        tally.record(&graded_label(case, *g), Some(r));
    }
    emit(
        tally.finish(9, "coupling tables equal the highest-weight construction"),
        &mut out,
    );

    out
}
