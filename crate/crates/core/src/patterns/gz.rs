use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::weight::{label_value, AlgebraShape, HighestWeight, Weight};
use crate::error::{Error, Result};

/// ℤ₂-degree of a basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        self + Parity::Odd
    }
}

/// Sum in ℤ₂.
impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Choice of ℤ₂-grading on a covariant module.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    /// Degree of `|μ)` is `Σ_{i≤m<p} θ_{i,p−1}` mod 2.
    #[default]
    Natural,
    Opposite,
}

/// A Gel'fand-Zetlin pattern: rows `r, r−1, …, 1`, row `j` holding
/// `μ_{1j}, …, μ_{jj}`.
///
/// Patterns compare in basis order: a pattern is "less" than another when it
/// comes first, which is descending lexicographic order on the entries read
/// top row first, left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GZPattern {
    shape: AlgebraShape,
    /// Flattened rows, top row first.
    entries: Vec<i64>,
}

fn row_offset(r: usize, j: usize) -> usize {
    // rows r, r-1, ..., j+1 come before row j
    (j + 1..=r).sum()
}

impl GZPattern {
    /// Builds a pattern from rows listed top to bottom, checking only the
    /// triangular shape. Use [`GZPattern::new`] for a validated pattern.
    pub fn from_rows_unchecked(shape: AlgebraShape, rows: &[Vec<i64>]) -> Result<Self> {
        let r = shape.r();
        if rows.len() != r {
            return Err(Error::InvalidPattern(format!("expected {r} rows, got {}", rows.len())));
        }
        let mut entries = Vec::with_capacity(r * (r + 1) / 2);
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != r - idx {
                return Err(Error::InvalidPattern(format!(
                    "row {} must have {} entries",
                    r - idx,
                    r - idx
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { shape, entries })
    }

    /// Builds and validates a pattern.
    pub fn new(shape: AlgebraShape, rows: &[Vec<i64>]) -> Result<Self> {
        let p = Self::from_rows_unchecked(shape, rows)?;
        p.validate()?;
        Ok(p)
    }

    pub(crate) fn from_entries(shape: AlgebraShape, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), shape.r() * (shape.r() + 1) / 2);
        Self { shape, entries }
    }

    pub fn shape(&self) -> AlgebraShape {
        self.shape
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Row `j` (`1 ≤ j ≤ r`), i.e. `μ_{1j}, …, μ_{jj}`.
    pub fn row(&self, j: usize) -> &[i64] {
        let off = row_offset(self.shape.r(), j);
        &self.entries[off..off + j]
    }

    /// Rows top to bottom.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.shape.r()).rev().map(|j| self.row(j).to_vec()).collect()
    }

    /// `μ_{ij}`, 1-based with `i ≤ j`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        debug_assert!(1 <= i && i <= j && j <= self.shape.r());
        self.entries[row_offset(self.shape.r(), j) + i - 1]
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<i64> {
        if i == 0 || i > j || j > self.shape.r() {
            return Err(Error::IndexOutOfRange(format!(
                "mu_({i},{j}) in a pattern with {} rows",
                self.shape.r()
            )));
        }
        Ok(self.get(i, j))
    }

    /// `l_{ij} = μ_{ij} − i + m + 1` for `i ≤ m`, `−μ_{ij} + i − m` otherwise.
    pub fn label(&self, i: usize, j: usize) -> i64 {
        label_value(self.shape.m(), i, self.get(i, j))
    }

    pub fn try_label(&self, i: usize, j: usize) -> Result<i64> {
        self.try_get(i, j).map(|x| label_value(self.shape.m(), i, x))
    }

    /// `θ_{ip} = μ_{i,p+1} − μ_{ip}` for `i ≤ m`, `m ≤ p < r`.
    pub fn theta(&self, i: usize, p: usize) -> i64 {
        self.get(i, p + 1) - self.get(i, p)
    }

    /// `|μ)_{±ij}`: the same pattern with `μ_{ij}` shifted by `delta`.
    pub fn shifted(&self, i: usize, j: usize, delta: i64) -> Self {
        let mut out = self.clone();
        out.entries[row_offset(self.shape.r(), j) + i - 1] += delta;
        out
    }

    pub fn row_sum(&self, j: usize) -> i64 {
        if j == 0 {
            0
        } else {
            self.row(j).iter().sum()
        }
    }

    /// Top row as a highest weight.
    pub fn highest_weight(&self) -> Result<HighestWeight> {
        HighestWeight::new(self.shape, self.row(self.shape.r()).to_vec())
    }

    /// Checks conditions 1–6 of the GZ basis, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        let (m, r) = (self.shape.m(), self.shape.r());
        let fail = |msg: String| Err(Error::InvalidPattern(msg));
        // 1. top row
        HighestWeight::new(self.shape, self.row(r).to_vec())
            .map_err(|e| Error::InvalidPattern(format!("condition 1 (top row): {e}")))?;
        // 2. θ_{i,p-1} ∈ {0,1}
        for p in m + 1..=r {
            for i in 1..=m {
                let t = self.get(i, p) - self.get(i, p - 1);
                if t != 0 && t != 1 {
                    return fail(format!("condition 2: mu_({i},{p}) - mu_({i},{}) = {t}", p - 1));
                }
            }
        }
        // 3. μ_{mp} ≥ #{i > m : μ_{ip} > 0}
        for p in m + 1..=r {
            let count = (m + 1..=p).filter(|&i| self.get(i, p) > 0).count() as i64;
            if self.get(m, p) < count {
                return fail(format!("condition 3 at row {p}"));
            }
        }
        // 4. μ_{m,m+1} = 0 ⇒ θ_{mm} = 0
        if r > m && self.get(m, m + 1) == 0 && self.get(m, m) != 0 {
            return fail("condition 4".to_string());
        }
        // 5. dominance of the first m entries in the super rows
        for p in m + 1..r {
            for i in 1..m {
                if self.get(i, p) < self.get(i + 1, p) {
                    return fail(format!("condition 5 at ({i},{p})"));
                }
            }
        }
        // 6. in-betweenness in both classical triangles
        let betweenness =
            |i: usize, j: usize| self.get(i, j + 1) >= self.get(i, j) && self.get(i, j) >= self.get(i + 1, j + 1);
        for j in 1..m {
            for i in 1..=j {
                if !betweenness(i, j) {
                    return fail(format!("condition 6 at ({i},{j})"));
                }
            }
        }
        for j in m + 1..r {
            for i in m + 1..=j {
                if !betweenness(i, j) {
                    return fail(format!("condition 6 at ({i},{j})"));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `k`-th component is (row `k` sum) − (row `k−1` sum).
    pub fn weight(&self) -> Weight {
        Weight(
            (1..=self.shape.r())
                .map(|k| self.row_sum(k) - self.row_sum(k - 1))
                .collect(),
        )
    }

    /// Degree under the given grading.
    pub fn parity(&self, grading: Grading) -> Parity {
        let (m, r) = (self.shape.m(), self.shape.r());
        let s: i64 = (1..=m).map(|i| self.get(i, r) - self.get(i, m)).sum();
        let natural = Parity::from_count(s);
        match grading {
            Grading::Natural => natural,
            Grading::Opposite => natural.flip(),
        }
    }
}

impl Ord for GZPattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| other.entries.cmp(&self.entries))
    }
}

impl PartialOrd for GZPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GZPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GZPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.shape.r())
            .rev()
            .map(|j| self.row(j).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "|{}|", rows.join(" / "))
    }
}

#[derive(Serialize, Deserialize)]
struct PatternRepr {
    m: usize,
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl Serialize for GZPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PatternRepr {
            m: self.shape.m(),
            n: self.shape.n(),
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GZPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PatternRepr::deserialize(d)?;
        let shape = AlgebraShape::new(repr.m, repr.n).map_err(serde::de::Error::custom)?;
        GZPattern::new(shape, &repr.rows).map_err(serde::de::Error::custom)
    }
}

/// The unique pattern of weight `μ`: every entry equals the top-row entry in
/// its column.
pub fn highest_weight_pattern(mu: &HighestWeight) -> GZPattern {
    let shape = mu.shape();
    let r = shape.r();
    let mut entries = Vec::with_capacity(r * (r + 1) / 2);
    for j in (1..=r).rev() {
        entries.extend((1..=j).map(|i| mu.get(i)));
    }
    GZPattern::from_entries(shape, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(m: usize, n: usize) -> AlgebraShape {
        AlgebraShape::new(m, n).unwrap()
    }

    #[test]
    fn rows_and_entries() {
        let p = GZPattern::new(sh(1, 1), &[vec![1, 0], vec![1]]).unwrap();
        assert_eq!(p.get(1, 2), 1);
        assert_eq!(p.get(2, 2), 0);
        assert_eq!(p.get(1, 1), 1);
        assert_eq!(p.rows(), vec![vec![1, 0], vec![1]]);
        assert!(p.try_get(2, 1).is_err());
        assert!(p.try_get(1, 3).is_err());
    }

    #[test]
    fn condition_four() {
        // mu_{m,m+1} = 0 forbids θ_{mm} = 1, i.e. μ_{11} = -1
        let p = GZPattern::from_rows_unchecked(sh(1, 1), &[vec![0, 0], vec![-1]]).unwrap();
        let err = p.validate().unwrap_err().to_string();
        assert!(err.contains("condition"), "{err}");
        assert!(!p.is_valid());
    }

    #[test]
    fn weights_and_parity() {
        let s = sh(2, 3);
        // |1_5): all rows 1 0 ... 0
        let rows: Vec<Vec<i64>> = (1..=5)
            .rev()
            .map(|j| {
                let mut v = vec![0; j];
                v[0] = 1;
                v
            })
            .collect();
        let top = GZPattern::new(s, &rows).unwrap();
        assert_eq!(top.weight().0, vec![1, 0, 0, 0, 0]);
        let mut rows1 = rows.clone();
        for row in rows1.iter_mut().skip(1) {
            row[0] = 0;
        }
        let bottom = GZPattern::new(s, &rows1).unwrap();
        assert_eq!(bottom.weight().0, vec![0, 0, 0, 0, 1]);
        assert_eq!(bottom.parity(Grading::Natural), Parity::Odd);
        assert_eq!(top.parity(Grading::Natural), Parity::Even);
        assert_eq!(top.parity(Grading::Opposite), Parity::Odd);
    }

    #[test]
    fn highest_weight_pattern_has_weight_mu() {
        let mu = HighestWeight::new(sh(2, 2), vec![3, 2, 2, 1]).unwrap();
        let p = highest_weight_pattern(&mu);
        assert!(p.is_valid());
        assert_eq!(p.weight().0, mu.components());
        assert_eq!(p.parity(Grading::Natural), Parity::Even);
    }

    #[test]
    fn json_encoding() {
        let p = GZPattern::new(sh(1, 1), &[vec![1, 0], vec![0]]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"m":1,"n":1,"rows":[[1,0],[0]]}"#);
        let back: GZPattern = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<GZPattern>(r#"{"m":1,"n":1,"rows":[[1,0],[2]]}"#).is_err());
    }
}
