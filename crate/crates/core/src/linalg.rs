//! Exact Gaussian elimination over [`RadicalScalar`].

use std::collections::BTreeMap;

use crate::arith::RadicalScalar;

/// Sparse vector keyed by coordinate.
pub type SparseVector = BTreeMap<usize, RadicalScalar>;

/// Reduced row echelon form of a growing set of rows in `nvars` unknowns.
///
/// A row may carry a right-hand side stored at coordinate `nvars`; a pivot
/// landing there marks the system inconsistent.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    nvars: usize,
    rows: Vec<SparseVector>,
}

fn axpy(target: &mut SparseVector, factor: &RadicalScalar, row: &SparseVector) {
    for (c, v) in row {
        let entry = target.entry(*c).or_default();
        *entry -= &(factor * v);
        if entry.is_zero() {
            target.remove(c);
        }
    }
}

impl RowEchelon {
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    fn pivot(row: &SparseVector) -> usize {
        *row.keys().next().expect("stored rows are nonzero")
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, mut v: SparseVector) -> SparseVector {
        v.retain(|_, x| !x.is_zero());
        for row in &self.rows {
            let p = Self::pivot(row);
            if let Some(f) = v.get(&p).cloned() {
                axpy(&mut v, &f, row);
            }
        }
        v
    }

    /// Inserts a row; returns `true` when it was independent of the others.
    pub fn insert(&mut self, v: SparseVector) -> bool {
        let v = self.reduce(v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.checked_inv().expect("nonzero radical scalars are invertible");
        let v: SparseVector = v.iter().map(|(c, x)| (*c, x * &inv)).collect();
        for row in &mut self.rows {
            if let Some(f) = row.get(&p).cloned() {
                axpy(row, &f, &v);
            }
        }
        let pos = self.rows.partition_point(|r| Self::pivot(r) < p);
        self.rows.insert(pos, v);
        true
    }

    pub fn is_consistent(&self) -> bool {
        self.rows.iter().all(|r| Self::pivot(r) < self.nvars)
    }

    /// Solution with every free unknown set to zero.
    pub fn particular_solution(&self) -> Option<Vec<RadicalScalar>> {
        if !self.is_consistent() {
            return None;
        }
        let mut x = vec![RadicalScalar::zero(); self.nvars];
        for row in &self.rows {
            x[Self::pivot(row)] = row.get(&self.nvars).cloned().unwrap_or_default();
        }
        Some(x)
    }

    /// Basis of the solutions of the homogeneous system.
    pub fn kernel(&self) -> Vec<Vec<RadicalScalar>> {
        let pivots: BTreeMap<usize, &SparseVector> = self.rows.iter().map(|r| (Self::pivot(r), r)).collect();
        (0..self.nvars)
            .filter(|c| !pivots.contains_key(c))
            .map(|free| {
                let mut x = vec![RadicalScalar::zero(); self.nvars];
                x[free] = RadicalScalar::one();
                for (p, row) in &pivots {
                    if let Some(v) = row.get(&free) {
                        x[*p] = -v;
                    }
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVector {
        entries
            .iter()
            .map(|&(c, v)| (c, RadicalScalar::from_integer(v)))
            .collect()
    }

    #[test]
    fn solve_and_kernel() {
        // x + y = 3, x - y = 1
        let mut e = RowEchelon::new(2);
        assert!(e.insert(sv(&[(0, 1), (1, 1), (2, 3)])));
        assert!(e.insert(sv(&[(0, 1), (1, -1), (2, 1)])));
        let x = e.particular_solution().unwrap();
        assert_eq!(x, vec![RadicalScalar::from_integer(2), RadicalScalar::from_integer(1)]);
        assert!(!e.insert(sv(&[(0, 2), (1, 2), (2, 6)])));

        let mut k = RowEchelon::new(3);
        k.insert(sv(&[(0, 1), (1, 1), (2, 1)]));
        let ker = k.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let s: RadicalScalar = v.iter().sum();
            assert!(s.is_zero());
        }
        let mut bad = RowEchelon::new(1);
        bad.insert(sv(&[(0, 1), (1, 1)]));
        bad.insert(sv(&[(0, 1), (1, 2)]));
        assert!(bad.particular_solution().is_none());
    }
}
