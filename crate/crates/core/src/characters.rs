//! Partition combinatorics and characters of covariant modules.
//!
//! The supersymmetric Schur function is assembled from Littlewood-Richardson
//! coefficients and classical Schur polynomials; both are computed by tableau
//! enumeration, so everything stays in exact integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::patterns::{AlgebraShape, Partition};

/// Integer-coefficient Laurent polynomial in `x_1..x_m, y_1..y_n`, keyed by
/// exponent vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exponents: Vec<i64>, coeff: BigInt) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            // drop cancelled monomials to keep the representation canonical
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[i64]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value with every variable set to 1.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Product of a polynomial in the first block of variables with one in the
    /// second block; exponent vectors are concatenated.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars + other.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = ea.clone();
                e.extend_from_slice(eb);
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * factor);
        }
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exponents: &'a [i64],
            coefficient: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&Term {
                exponents: e,
                coefficient: c.to_string(),
            })?;
        }
        seq.end()
    }
}

/// Classical Schur polynomial `s_λ(x_1..x_nvars)` as a sum over semistandard
/// tableaux of shape `λ`.
pub fn schur_polynomial(lambda: &Partition, nvars: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero(nvars);
    if lambda.len() > nvars {
        return out;
    }
    let shape = lambda.parts();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut content = vec![0i64; nvars];
    fn fill(
        shape: &[usize],
        nvars: usize,
        row: usize,
        col: usize,
        filling: &mut Vec<Vec<usize>>,
        content: &mut Vec<i64>,
        out: &mut LaurentPolynomial,
    ) {
        if row == shape.len() {
            out.add_term(content.clone(), BigInt::one());
            return;
        }
        if col == shape[row] {
            fill(shape, nvars, row + 1, 0, filling, content, out);
            return;
        }
        let lo_row = if col > 0 { filling[row][col - 1] } else { 1 };
        let lo_col = if row > 0 { filling[row - 1][col] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=nvars {
            filling[row][col] = v;
            content[v - 1] += 1;
            fill(shape, nvars, row, col + 1, filling, content, out);
            content[v - 1] -= 1;
        }
    }
    fill(shape, nvars, 0, 0, &mut filling, &mut content, &mut out);
    out
}

/// Number of Littlewood-Richardson tableaux of skew shape `λ/σ` and content
/// `τ`: semistandard fillings whose reverse reading word is a lattice word.
fn lr_tableaux(lambda: &Partition, sigma: &Partition, tau: &Partition) -> u64 {
    let rows = lambda.len();
    let inner: Vec<usize> = (1..=rows).map(|i| sigma.part(i)).collect();
    let outer: Vec<usize> = lambda.parts().to_vec();
    // cells in reading order: top to bottom, right to left within a row
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (inner[i]..outer[i]).rev().map(move |j| (i, j)))
        .collect();
    let letters = tau.len();
    let mut filling: Vec<Vec<usize>> = outer.iter().map(|&l| vec![0; l]).collect();
    let mut counts = vec![0usize; letters + 1];

    fn place(
        idx: usize,
        cells: &[(usize, usize)],
        inner: &[usize],
        outer: &[usize],
        tau: &Partition,
        filling: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let mut total = 0;
        for v in 1..counts.len() {
            if counts[v] == tau.part(v) {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            if j + 1 < outer[i] && v > filling[i][j + 1] {
                continue;
            }
            if i > 0 && j >= inner[i - 1] && j < outer[i - 1] && v <= filling[i - 1][j] {
                continue;
            }
            filling[i][j] = v;
            counts[v] += 1;
            total += place(idx + 1, cells, inner, outer, tau, filling, counts);
            counts[v] -= 1;
        }
        total
    }
    place(0, &cells, &inner, &outer, tau, &mut filling, &mut counts)
}

/// `c^λ_{στ}` for every `λ` with `|λ| = |σ| + |τ|`, nonzero entries only.
pub fn lr_coefficients(sigma: &Partition, tau: &Partition) -> BTreeMap<Partition, u64> {
    let size = sigma.size() + tau.size();
    Partition::all_of_size(size)
        .into_iter()
        .filter(|lambda| sigma.is_contained_in(lambda) && tau.is_contained_in(lambda))
        .filter_map(|lambda| {
            let c = lr_tableaux(&lambda, sigma, tau);
            (c > 0).then_some((lambda, c))
        })
        .collect()
}

fn check_hook(lambda: &Partition, shape: AlgebraShape) -> Result<()> {
    if lambda.in_hook(shape.m(), shape.n()) {
        Ok(())
    } else {
        Err(Error::NotInHook(lambda.parts().to_vec(), shape.m(), shape.n()))
    }
}

/// `s_λ(x|y) = Σ_{σ,τ} c^λ_{στ} s_σ(x) s_{τ'}(y)`.
pub fn super_schur_character(lambda: &Partition, shape: AlgebraShape) -> Result<LaurentPolynomial> {
    check_hook(lambda, shape)?;
    let (m, n) = (shape.m(), shape.n());
    let mut out = LaurentPolynomial::zero(m + n);
    let subs = lambda.subpartitions();
    for tau in subs.iter().filter(|t| t.part(1) <= n) {
        let y_part = schur_polynomial(&tau.conjugate(), n);
        for sigma in subs
            .iter()
            .filter(|s| s.len() <= m && s.size() + tau.size() == lambda.size())
        {
            let c = lr_coefficients(sigma, tau).get(lambda).copied().unwrap_or(0);
            if c == 0 {
                continue;
            }
            let x_part = schur_polynomial(sigma, m);
            out.add_scaled(&x_part.tensor(&y_part), &BigInt::from(c));
        }
    }
    Ok(out)
}

/// Dimension of the covariant module labelled by `λ`: the character at all
/// variables equal to 1.
pub fn dimension(lambda: &Partition, shape: AlgebraShape) -> Result<BigInt> {
    Ok(super_schur_character(lambda, shape)?.at_ones())
}

/// `gl(m|n) ↓ gl(m|n−1)`: all `σ` in the `(m, n−1)`-hook with `λ − σ` a
/// vertical strip, i.e. the conjugates interlace.
pub fn branch_super(lambda: &Partition, shape: AlgebraShape) -> Result<Vec<Partition>> {
    if shape.n() == 0 {
        return Err(Error::NoSuperRow);
    }
    check_hook(lambda, shape)?;
    let conj = lambda.conjugate();
    let (m, n1) = (shape.m(), shape.n() - 1);
    let mut out: Vec<Partition> = interlacing(&conj)
        .into_iter()
        .map(|c| c.conjugate())
        .filter(|s| s.in_hook(m, n1))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `gl(m) ↓ gl(m−1)`: all `σ` with `λ_i ≥ σ_i ≥ λ_{i+1}`.
pub fn branch_classical(lambda: &Partition) -> Vec<Partition> {
    let mut out = interlacing(lambda);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn interlacing(lambda: &Partition) -> Vec<Partition> {
    let l = lambda.len();
    let mut out = Vec::new();
    fn rec(lambda: &Partition, i: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > l {
            out.push(Partition::from_padded(cur.clone()).expect("interlacing keeps order"));
            return;
        }
        for v in (lambda.part(i + 1)..=lambda.part(i)).rev() {
            cur.push(v);
            rec(lambda, i + 1, l, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, l, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sh(m: usize, n: usize) -> AlgebraShape {
        AlgebraShape::new(m, n).unwrap()
    }

    #[test]
    fn pieri_and_identity() {
        let c = lr_coefficients(&p(&[1]), &p(&[1]));
        assert_eq!(c.into_iter().collect::<Vec<_>>(), vec![(p(&[1, 1]), 1), (p(&[2]), 1)]);
        let c = lr_coefficients(&p(&[2, 1]), &Partition::empty());
        assert_eq!(c.into_iter().collect::<Vec<_>>(), vec![(p(&[2, 1]), 1)]);
    }

    #[test]
    fn natural_character() {
        let ch = super_schur_character(&p(&[1]), sh(2, 3)).unwrap();
        assert_eq!(ch.terms().count(), 5);
        for k in 0..5 {
            let mut e = vec![0; 5];
            e[k] = 1;
            assert_eq!(ch.coefficient(&e), BigInt::one());
        }
        assert_eq!(dimension(&p(&[1]), sh(3, 1)).unwrap(), BigInt::from(4));
        assert!(super_schur_character(&p(&[2, 2]), sh(1, 1)).is_err());
    }

    #[test]
    fn branching_examples() {
        assert_eq!(
            branch_super(&p(&[1]), sh(1, 1)).unwrap(),
            vec![p(&[1]), Partition::empty()]
        );
        assert_eq!(
            branch_super(&p(&[1, 1]), sh(2, 2)).unwrap(),
            vec![p(&[1, 1]), p(&[1]), Partition::empty()]
        );
        assert!(matches!(branch_super(&p(&[1]), sh(2, 0)), Err(Error::NoSuperRow)));
        assert_eq!(branch_classical(&p(&[1])), vec![p(&[1]), Partition::empty()]);
        assert_eq!(
            branch_classical(&p(&[2, 1])),
            vec![p(&[2, 1]), p(&[2]), p(&[1, 1]), p(&[1])]
        );
        assert_eq!(branch_classical(&Partition::empty()), vec![Partition::empty()]);
    }

    #[test]
    fn schur_in_two_variables() {
        // s_(2,1)(x1,x2) = x1^2 x2 + x1 x2^2
        let s = schur_polynomial(&p(&[2, 1]), 2);
        assert_eq!(s.terms().count(), 2);
        assert_eq!(s.coefficient(&[2, 1]), BigInt::one());
        assert_eq!(s.coefficient(&[1, 2]), BigInt::one());
        assert!(schur_polynomial(&p(&[1, 1, 1]), 2).is_zero());
    }
}
