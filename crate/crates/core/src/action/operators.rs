//! Generator matrices on the canonical GZ basis.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::formulas::{act_e, act_f, act_h};
use crate::arith::RadicalScalar;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::patterns::{enumerate_patterns_with, AlgebraShape, GZPattern, HighestWeight, Parity};
use crate::sparse::SparseMatrix;

/// A Chevalley generator of `gl(m|n)`; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    H(usize),
    E(usize),
    F(usize),
}

impl Generator {
    /// `e_m` and `f_m` are odd, everything else is even.
    pub fn parity(self, shape: AlgebraShape) -> Parity {
        match self {
            Generator::E(k) | Generator::F(k) if shape.is_odd_index(k) => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Parses `h3`, `e1`, `f2`.
    pub fn parse(s: &str) -> Option<Self> {
        let (head, idx) = s.split_at_checked(1)?;
        let k: usize = idx.parse().ok()?;
        match head {
            "h" | "H" => Some(Generator::H(k)),
            "e" | "E" => Some(Generator::E(k)),
            "f" | "F" => Some(Generator::F(k)),
            _ => None,
        }
    }

    /// Every generator of `gl(m|n)` in the order `h_1..h_r, e_1.., f_1..`.
    pub fn all(shape: AlgebraShape) -> Vec<Self> {
        let r = shape.r();
        (1..=r)
            .map(Generator::H)
            .chain((1..r).map(Generator::E))
            .chain((1..r).map(Generator::F))
            .collect()
    }

    fn check(self, shape: AlgebraShape) -> Result<()> {
        let (k, max) = match self {
            Generator::H(k) => (k, shape.r()),
            Generator::E(k) | Generator::F(k) => (k, shape.r() - 1),
        };
        if k == 0 || k > max {
            return Err(Error::IndexOutOfRange(format!("{self} in {shape}")));
        }
        Ok(())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::H(k) => write!(f, "h{k}"),
            Generator::E(k) => write!(f, "e{k}"),
            Generator::F(k) => write!(f, "f{k}"),
        }
    }
}

/// The canonical ordered basis of `V([μ])` with a reverse index.
#[derive(Clone, Debug)]
pub struct Basis {
    mu: HighestWeight,
    patterns: Vec<GZPattern>,
    index: HashMap<GZPattern, usize>,
}

impl Basis {
    pub fn new(mu: &HighestWeight) -> Self {
        Self::with_exec(mu, Exec::default())
    }

    pub fn with_exec(mu: &HighestWeight, exec: Exec) -> Self {
        let patterns = enumerate_patterns_with(mu, exec);
        let index = patterns.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Self {
            mu: mu.clone(),
            patterns,
            index,
        }
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn patterns(&self) -> &[GZPattern] {
        &self.patterns
    }

    pub fn pattern(&self, i: usize) -> &GZPattern {
        &self.patterns[i]
    }

    pub fn index_of(&self, p: &GZPattern) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// A generator represented as a sparse matrix on a [`Basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator {
    pub generator: Option<Generator>,
    pub parity: Parity,
    pub matrix: SparseMatrix,
}

impl SparseOperator {
    pub fn is_odd(&self) -> bool {
        self.parity.is_odd()
    }
}

fn column(g: Generator, basis: &Basis, j: usize) -> Result<Vec<(usize, RadicalScalar)>> {
    let p = basis.pattern(j);
    let terms = match g {
        Generator::H(k) => {
            let v = act_h(k, p)?;
            return Ok(if v.is_zero() { Vec::new() } else { vec![(j, v)] });
        }
        Generator::E(k) => act_e(k, p)?,
        Generator::F(k) => act_f(k, p)?,
    };
    terms
        .into_iter()
        .map(|t| {
            let i = basis
                .index_of(&t.pattern)
                .ok_or_else(|| Error::InvalidPattern(format!("{g} maps {p} outside the basis to {}", t.pattern)))?;
            Ok((i, t.coefficient))
        })
        .collect()
}

/// Assembles the matrix of `g` on `basis`, one column per task.
pub fn operator_on(g: Generator, basis: &Basis, exec: Exec) -> Result<SparseOperator> {
    let shape = basis.highest_weight().shape();
    g.check(shape)?;
    let cols = exec.try_map_range(basis.len(), |j| column(g, basis, j))?;
    Ok(SparseOperator {
        generator: Some(g),
        parity: g.parity(shape),
        matrix: SparseMatrix::from_columns(basis.len(), cols),
    })
}

/// Matrix of `g` on `V([μ])` in the canonical basis.
pub fn generator_matrix(g: Generator, mu: &HighestWeight) -> Result<SparseOperator> {
    operator_on(g, &Basis::new(mu), Exec::default())
}

/// All generator matrices of one module.
#[derive(Clone, Debug)]
pub struct Representation {
    basis: Basis,
    h: Vec<SparseOperator>,
    e: Vec<SparseOperator>,
    f: Vec<SparseOperator>,
}

impl Representation {
    pub fn new(mu: &HighestWeight) -> Result<Self> {
        Self::with_exec(mu, Exec::default())
    }

    pub fn with_exec(mu: &HighestWeight, exec: Exec) -> Result<Self> {
        Self::from_basis(Basis::with_exec(mu, exec), exec)
    }

    pub fn from_basis(basis: Basis, exec: Exec) -> Result<Self> {
        let r = basis.highest_weight().shape().r();
        let build = |ctor: fn(usize) -> Generator, count: usize| -> Result<Vec<SparseOperator>> {
            (1..=count).map(|k| operator_on(ctor(k), &basis, exec)).collect()
        };
        let h = build(Generator::H, r)?;
        let e = build(Generator::E, r - 1)?;
        let f = build(Generator::F, r - 1)?;
        Ok(Self { basis, h, e, f })
    }

    pub fn shape(&self) -> AlgebraShape {
        self.basis.highest_weight().shape()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn h(&self, k: usize) -> &SparseOperator {
        &self.h[k - 1]
    }

    pub fn e(&self, k: usize) -> &SparseOperator {
        &self.e[k - 1]
    }

    pub fn f(&self, k: usize) -> &SparseOperator {
        &self.f[k - 1]
    }

    pub fn get(&self, g: Generator) -> Result<&SparseOperator> {
        g.check(self.shape())?;
        Ok(match g {
            Generator::H(k) => self.h(k),
            Generator::E(k) => self.e(k),
            Generator::F(k) => self.f(k),
        })
    }

    /// Replaces one operator; used to inject faults in tests.
    pub fn replace(&mut self, op: SparseOperator) -> Result<()> {
        let g = op
            .generator
            .ok_or_else(|| Error::Shape("only Chevalley generators can be replaced".to_string()))?;
        g.check(self.shape())?;
        let slot = match g {
            Generator::H(k) => &mut self.h[k - 1],
            Generator::E(k) => &mut self.e[k - 1],
            Generator::F(k) => &mut self.f[k - 1],
        };
        *slot = op;
        Ok(())
    }
}

/// Supercommutator `[a, b} = ab − (−1)^{|a||b|} ba`.
pub fn supercommutator(a: &SparseOperator, b: &SparseOperator, exec: Exec) -> SparseOperator {
    let ab = a.matrix.mul(&b.matrix, exec);
    let ba = b.matrix.mul(&a.matrix, exec);
    let matrix = if a.is_odd() && b.is_odd() {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    };
    SparseOperator {
        generator: None,
        parity: a.parity + b.parity,
        matrix,
    }
}

/// Matrix unit `e_{ij}` built from Chevalley generators by nested
/// supercommutators: `e_{ij} = [e_{i,j−1}, e_{j−1}}` for `i < j` and
/// `e_{ji} = [f_{j−1}, e_{j−1,i}}`.
pub fn matrix_unit(rep: &Representation, i: usize, j: usize, exec: Exec) -> Result<SparseOperator> {
    let r = rep.shape().r();
    if i == 0 || j == 0 || i > r || j > r {
        return Err(Error::IndexOutOfRange(format!("e_({i},{j}) with r = {r}")));
    }
    if i == j {
        return Ok(rep.h(i).clone());
    }
    if i < j {
        if j == i + 1 {
            return Ok(rep.e(i).clone());
        }
        let left = matrix_unit(rep, i, j - 1, exec)?;
        Ok(supercommutator(&left, rep.e(j - 1), exec))
    } else {
        if i == j + 1 {
            return Ok(rep.f(j).clone());
        }
        let right = matrix_unit(rep, i - 1, j, exec)?;
        Ok(supercommutator(rep.f(i - 1), &right, exec))
    }
}
