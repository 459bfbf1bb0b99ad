//! Command-line front end for `glmn`: argument parsing, job execution and
//! the JSON documents it writes.

pub mod docs;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use glmn::action::{verify_representation, Generator, Representation};
use glmn::cgc::{cgc_table_with, verify_equivariance_with};
use glmn::characters::{branch_classical, branch_super, dimension, super_schur_character};
use glmn::patterns::{
    enumerate_patterns, partition_from_weight, weight_from_partition, AlgebraShape, Grading, HighestWeight, Partition,
};
use glmn::Exec;
use glmn_check::acceptance::{self, Scope};

use docs::*;

/// Environment variable holding the worker thread count.
pub const THREADS_VAR: &str = "GLMN_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "glmn",
    version,
    about = "Gel'fand-Zetlin bases and Clebsch-Gordan coefficients for gl(m|n)"
)]
#[command(arg_required_else_help = true, subcommand_negates_reqs = true)]
pub struct Cli {
    /// Run the acceptance suite and exit.
    #[arg(long, required = true)]
    pub seed_check: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the basis patterns of a module.
    Patterns(ModuleArgs),
    /// Character as a polynomial in x_1..x_m, y_1..y_n.
    Character(ModuleArgs),
    /// Restriction to gl(m|n-1), or gl(m-1) when n = 0.
    Branch(ModuleArgs),
    /// Exact generator matrices.
    Matrices {
        #[command(flatten)]
        module: ModuleArgs,
        /// Comma-separated generators such as `e1,f2,h3`; all by default.
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
    },
    /// Check every defining relation on a module.
    Verify(ModuleArgs),
    /// Clebsch-Gordan coefficients of V(mu) x V(natural).
    Cgc {
        #[command(flatten)]
        module: ModuleArgs,
        /// Only the summand with mu_k raised by one.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Orthogonality and equivariance report for the coefficient table.
    CgcVerify(ModuleArgs),
    /// Dimension of a module.
    Dim(ModuleArgs),
    /// Labels and atypical roots of a highest weight.
    Typicality(ModuleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GradingArg {
    Natural,
    Opposite,
}

impl From<GradingArg> for Grading {
    fn from(g: GradingArg) -> Self {
        match g {
            GradingArg::Natural => Grading::Natural,
            GradingArg::Opposite => Grading::Opposite,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ModuleArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Highest weight, comma-separated, m + n entries.
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "partition",
        conflicts_with = "partition"
    )]
    pub mu: Option<String>,
    /// Partition in the (m,n)-hook, comma-separated; empty for the trivial module.
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long, value_enum, default_value_t = GradingArg::Natural)]
    pub grading: GradingArg,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Bad arguments or an invalid weight; the process exits with status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<glmn::Error> for InputError {
    fn from(e: glmn::Error) -> Self {
        InputError(e.to_string())
    }
}

/// Text produced by a job and whether its checks passed; a failed check
/// still writes its report and exits with status 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, InputError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| InputError(format!("cannot parse {what} entry {x:?}")))
        })
        .collect()
}

impl ModuleArgs {
    pub fn shape(&self) -> Result<AlgebraShape, InputError> {
        Ok(AlgebraShape::new(self.m, self.n)?)
    }

    pub fn highest_weight(&self) -> Result<HighestWeight, InputError> {
        let shape = self.shape()?;
        match (&self.mu, &self.partition) {
            (Some(mu), None) => Ok(HighestWeight::new(shape, parse_list(mu, "weight")?)?),
            (None, Some(p)) => {
                let parts: Vec<usize> = parse_list(p, "partition")?;
                Ok(weight_from_partition(&Partition::from_padded(parts)?, shape)?)
            }
            _ => Err(InputError("exactly one of --mu and --partition is required".into())),
        }
    }

    pub fn grading(&self) -> Grading {
        self.grading.into()
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn generators_from(names: &[String], shape: AlgebraShape) -> Result<Vec<Generator>, InputError> {
    if names.is_empty() {
        return Ok(Generator::all(shape));
    }
    names
        .iter()
        .map(|s| Generator::parse(s).ok_or_else(|| InputError(format!("unknown generator {s:?}"))))
        .collect()
}

fn cgc_csv(doc: &CgcDoc) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let pat = |rows: &[Vec<i64>]| {
        rows.iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ")
    };
    w.write_record(["k", "bra", "j", "ket", "value"])
        .expect("in-memory write");
    for b in &doc.blocks {
        for e in &b.entries {
            w.write_record([
                b.k.to_string(),
                pat(&e.bra),
                e.j.to_string(),
                pat(&e.ket),
                e.value.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// Runs one subcommand and returns what it would print.
pub fn execute(command: &Command, exec: Exec) -> Result<Output, InputError> {
    match command {
        Command::Patterns(a) => Ok(Output::ok(json(&PatternsDoc::build(&a.highest_weight()?, a.grading())))),
        Command::Character(a) => {
            let mu = a.highest_weight()?;
            let chi = super_schur_character(&partition_from_weight(&mu), mu.shape())?;
            Ok(Output::ok(json(&CharacterDoc::build(&mu, &chi))))
        }
        Command::Branch(a) => {
            let mu = a.highest_weight()?;
            let shape = mu.shape();
            let lambda = partition_from_weight(&mu);
            let (sub, parts) = if shape.n() > 0 {
                (
                    AlgebraShape::new(shape.m(), shape.n() - 1)?,
                    branch_super(&lambda, shape)?,
                )
            } else if shape.m() > 1 {
                let sub = AlgebraShape::new(shape.m() - 1, 0)?;
                (
                    sub,
                    branch_classical(&lambda)
                        .into_iter()
                        .filter(|s| s.len() < shape.m())
                        .collect(),
                )
            } else {
                return Err(InputError("gl(1|0) has no subalgebra to branch to".into()));
            };
            let components = parts
                .into_iter()
                .map(|sigma| {
                    let nu = weight_from_partition(&sigma, sub)?;
                    Ok(BranchComponent {
                        partition: sigma.parts().to_vec(),
                        highest_weight: nu.components().to_vec(),
                        dimension: enumerate_patterns(&nu).len(),
                    })
                })
                .collect::<Result<_, InputError>>()?;
            Ok(Output::ok(json(&BranchDoc {
                module: Module::of(&mu),
                subalgebra: [sub.m(), sub.n()],
                components,
            })))
        }
        Command::Matrices { module, generators } => {
            let mu = module.highest_weight()?;
            let gens = generators_from(generators, mu.shape())?;
            let rep = Representation::with_exec(&mu, exec)?;
            Ok(Output::ok(json(&MatricesDoc::build(&rep, module.grading(), &gens)?)))
        }
        Command::Verify(a) => {
            let rep = Representation::with_exec(&a.highest_weight()?, exec)?;
            let report = verify_representation(&rep, exec);
            Ok(Output {
                text: json(&report),
                passed: report.all_passed(),
            })
        }
        Command::Cgc { module, k, format } => {
            let mu = module.highest_weight()?;
            if let Some(k) = *k {
                if mu.raised(k).is_none() {
                    return Err(InputError(format!(
                        "mu with entry {k} raised is not a covariant weight"
                    )));
                }
            }
            let table = cgc_table_with(&mu, module.grading(), exec)?;
            let doc = CgcDoc::build(&table, *k);
            Ok(Output::ok(match format {
                Format::Json => json(&doc),
                Format::Csv => cgc_csv(&doc),
            }))
        }
        Command::CgcVerify(a) => {
            let report = verify_equivariance_with(&a.highest_weight()?, a.grading(), exec)?;
            Ok(Output {
                text: json(&report),
                passed: report.all_passed(),
            })
        }
        Command::Dim(a) => {
            let mu = a.highest_weight()?;
            Ok(Output::ok(format!(
                "{}\n",
                dimension(&partition_from_weight(&mu), mu.shape())?
            )))
        }
        Command::Typicality(a) => Ok(Output::ok(json(&TypicalityDoc::build(&a.highest_weight()?)))),
    }
}

/// The acceptance suite at the stated bounds, one line per criterion.
pub fn seed_check(exec: Exec, mut line: impl FnMut(&str)) -> bool {
    let outcomes = acceptance::run(&Scope::full(), exec, |o| line(&o.to_string()));
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    line(&format!(
        "{} of {} criteria passed",
        outcomes.len() - failed,
        outcomes.len()
    ));
    failed == 0
}

impl Command {
    pub fn module(&self) -> &ModuleArgs {
        match self {
            Command::Patterns(a)
            | Command::Character(a)
            | Command::Branch(a)
            | Command::Verify(a)
            | Command::CgcVerify(a)
            | Command::Dim(a)
            | Command::Typicality(a) => a,
            Command::Matrices { module, .. } | Command::Cgc { module, .. } => module,
        }
    }
}
