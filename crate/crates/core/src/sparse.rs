//! Column-compressed sparse matrices over [`RadicalScalar`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{ExactRational, RadicalScalar};
use crate::exec::Exec;

/// Square or rectangular matrix stored column by column; each column keeps
/// its nonzero entries sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, RadicalScalar)>>,
}

/// One stored entry, as emitted by [`SparseMatrix::triplets`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triplet {
    pub row: usize,
    pub col: usize,
    pub value: RadicalScalar,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: (0..n).map(|i| vec![(i, RadicalScalar::one())]).collect(),
        }
    }

    pub fn diagonal(values: Vec<RadicalScalar>) -> Self {
        let n = values.len();
        Self {
            rows: n,
            cols: values
                .into_iter()
                .enumerate()
                .map(|(i, v)| if v.is_zero() { Vec::new() } else { vec![(i, v)] })
                .collect(),
        }
    }

    /// Builds a matrix from columns given as `(row, value)` lists in any
    /// order; duplicates are summed and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, RadicalScalar)>>) -> Self {
        let cols = columns
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, RadicalScalar> = BTreeMap::new();
                for (r, v) in col {
                    assert!(r < rows, "row index {r} out of range {rows}");
                    *acc.entry(r).or_default() += v;
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Self { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(usize, RadicalScalar)] {
        &self.cols[j]
    }

    pub fn get(&self, row: usize, col: usize) -> RadicalScalar {
        let c = &self.cols[col];
        match c.binary_search_by_key(&row, |(r, _)| *r) {
            Ok(idx) => c[idx].1.clone(),
            Err(_) => RadicalScalar::zero(),
        }
    }

    /// Overwrites one entry. Used for fault injection in tests.
    pub fn set(&mut self, row: usize, col: usize, value: RadicalScalar) {
        let c = &mut self.cols[col];
        match c.binary_search_by_key(&row, |(r, _)| *r) {
            Ok(idx) if value.is_zero() => {
                c.remove(idx);
            }
            Ok(idx) => c[idx].1 = value,
            Err(_) if value.is_zero() => {}
            Err(idx) => c.insert(idx, (row, value)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// First nonzero entry in (column, row) order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, RadicalScalar)> {
        self.cols
            .iter()
            .enumerate()
            .find_map(|(j, c)| c.first().map(|(i, v)| (*i, j, v.clone())))
    }

    /// All entries sorted by `(row, col)`.
    pub fn triplets(&self) -> Vec<Triplet> {
        let mut out: Vec<Triplet> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(col, c)| {
                c.iter().map(move |(row, v)| Triplet {
                    row: *row,
                    col,
                    value: v.clone(),
                })
            })
            .collect();
        out.sort_by_key(|t| (t.row, t.col));
        out
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                cols[*i].push((j, v.clone()));
            }
        }
        Self {
            rows: self.cols.len(),
            cols,
        }
    }

    pub fn scale(&self, q: &ExactRational) -> Self {
        self.map_values(|v| v * q)
    }

    pub fn neg(&self) -> Self {
        self.map_values(|v| -v)
    }

    fn map_values(&self, f: impl Fn(&RadicalScalar) -> RadicalScalar) -> Self {
        Self {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|(i, v)| (*i, f(v)))
                        .filter(|(_, v)| !v.is_zero())
                        .collect()
                })
                .collect(),
        }
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        assert_eq!(
            (self.rows, self.cols.len()),
            (other.rows, other.cols.len()),
            "shape mismatch"
        );
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut ia, mut ib) = (0, 0);
                while ia < a.len() || ib < b.len() {
                    let ra = a.get(ia).map_or(usize::MAX, |e| e.0);
                    let rb = b.get(ib).map_or(usize::MAX, |e| e.0);
                    let rhs = |v: &RadicalScalar| if subtract { -v } else { v.clone() };
                    if ra < rb {
                        out.push(a[ia].clone());
                        ia += 1;
                    } else if rb < ra {
                        out.push((rb, rhs(&b[ib].1)));
                        ib += 1;
                    } else {
                        let v = if subtract {
                            &a[ia].1 - &b[ib].1
                        } else {
                            &a[ia].1 + &b[ib].1
                        };
                        if !v.is_zero() {
                            out.push((ra, v));
                        }
                        ia += 1;
                        ib += 1;
                    }
                }
                out
            })
            .collect();
        Self { rows: self.rows, cols }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    /// `self · other`, one output column per task.
    pub fn mul(&self, other: &Self, exec: Exec) -> Self {
        assert_eq!(self.cols.len(), other.rows, "shape mismatch");
        let cols = exec.map(&other.cols, |bcol| {
            let mut acc: BTreeMap<usize, RadicalScalar> = BTreeMap::new();
            for (k, bv) in bcol {
                for (i, av) in &self.cols[*k] {
                    *acc.entry(*i).or_default() += av * bv;
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        });
        Self { rows: self.rows, cols }
    }

    /// Product of several matrices, left to right.
    pub fn chain(factors: &[&Self], exec: Exec) -> Self {
        let (first, rest) = factors.split_first().expect("at least one factor");
        rest.iter().fold((*first).clone(), |acc, m| acc.mul(m, exec))
    }

    /// `self · v` for a dense vector.
    pub fn apply(&self, v: &[RadicalScalar]) -> Vec<RadicalScalar> {
        assert_eq!(v.len(), self.cols.len(), "shape mismatch");
        let mut out = vec![RadicalScalar::zero(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            if v[j].is_zero() {
                continue;
            }
            for (i, a) in c {
                out[*i] += a * &v[j];
            }
        }
        out
    }

    pub fn trace(&self) -> RadicalScalar {
        (0..self.rows.min(self.cols.len())).map(|i| self.get(i, i)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sqrt_rational;

    fn r(n: i64) -> RadicalScalar {
        RadicalScalar::from_integer(n)
    }

    #[test]
    fn algebra() {
        let s2 = sqrt_rational(&ExactRational::from_integer(2.into())).unwrap();
        let a = SparseMatrix::from_columns(2, vec![vec![(1, s2.clone())], vec![(0, r(3))]]);
        let b = a.transpose();
        assert_eq!(b.get(0, 1), s2);
        let p = a.mul(&b, Exec::Sequential);
        assert_eq!(p, a.mul(&b, Exec::Parallel));
        assert_eq!(p.get(0, 0), r(9));
        assert_eq!(p.get(1, 1), r(2));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&a).get(0, 1), r(6));
        assert_eq!(p.trace(), r(11));
        assert_eq!(a.triplets().len(), 2);
        assert_eq!(a.first_nonzero(), Some((1, 0, s2)));
        assert_eq!(a.apply(&[r(1), r(1)])[0], r(3));
        let mut c = a.clone();
        c.set(0, 1, RadicalScalar::zero());
        assert_eq!(c.nnz(), 1);
    }
}
