use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair `(m, n)` of `gl(m|n)`; `r = m + n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraShape {
    m: usize,
    n: usize,
}

impl AlgebraShape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Shape("m must be positive".into()));
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.m + self.n
    }

    /// `e_k`, `f_k` are odd exactly for `k = m` (and only when `n > 0`).
    pub fn is_odd_index(&self, k: usize) -> bool {
        self.n > 0 && k == self.m
    }

    /// All shapes with `m ≥ 1`, `n ≥ 0` and `m + n ≤ max_r`, ordered by rank
    /// and then by `m` descending.
    pub fn all_up_to(max_r: usize) -> Vec<Self> {
        (1..=max_r)
            .flat_map(|r| (1..=r).rev().map(move |m| Self { m, n: r - m }))
            .collect()
    }
}

impl fmt::Display for AlgebraShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// Weight vector: eigenvalues of `h_1, …, h_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn components(&self) -> &[i64] {
        &self.0
    }
}

/// An integral dominant, covariant highest weight `[μ_{1r}, …, μ_{rr}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HighestWeight {
    shape: AlgebraShape,
    mu: Vec<i64>,
}

impl HighestWeight {
    /// Validates nonnegativity, dominance away from position `m`, and the
    /// covariance bound on `μ_{mr}`.
    pub fn new(shape: AlgebraShape, mu: Vec<i64>) -> Result<Self> {
        let (m, r) = (shape.m(), shape.r());
        let bad = |condition: &str| Error::InvalidWeight {
            weight: mu.clone(),
            condition: condition.to_string(),
        };
        if mu.len() != r {
            return Err(bad(&format!("length must equal r = {r}")));
        }
        if mu.iter().any(|&x| x < 0) {
            return Err(bad("nonnegativity (all components in Z+)"));
        }
        for i in 1..r {
            if i != m && mu[i - 1] < mu[i] {
                return Err(bad(&format!("cond1: mu_{i},r - mu_{},r must be in Z+", i + 1)));
            }
        }
        if shape.n() > 0 {
            let positive = mu[m..].iter().filter(|&&x| x > 0).count() as i64;
            if mu[m - 1] < positive {
                return Err(bad(&format!(
                    "cond2: mu_{m},r = {} is below #{{i > m : mu_i,r > 0}} = {positive}",
                    mu[m - 1]
                )));
            }
        }
        Ok(Self { shape, mu })
    }

    pub fn shape(&self) -> AlgebraShape {
        self.shape
    }

    pub fn components(&self) -> &[i64] {
        &self.mu
    }

    /// `μ_{ir}`, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.mu[i - 1]
    }

    /// `l_{ir}` of the top row.
    pub fn label(&self, i: usize) -> i64 {
        label_value(self.shape.m(), i, self.mu[i - 1])
    }

    /// `[μ]_{+k}` if `k` is in range and the result is again a valid
    /// covariant highest weight.
    pub fn raised(&self, k: usize) -> Option<Self> {
        let mut mu = self.mu.clone();
        *mu.get_mut(k.checked_sub(1)?)? += 1;
        Self::new(self.shape, mu).ok()
    }

    /// Total box count `|λ|`.
    pub fn size(&self) -> i64 {
        self.mu.iter().sum()
    }

    /// Restriction to the even subalgebra: the `gl(m)` and `gl(n)` labels.
    pub fn even_parts(&self) -> (Vec<i64>, Vec<i64>) {
        let m = self.shape.m();
        (self.mu[..m].to_vec(), self.mu[m..].to_vec())
    }
}

impl<'de> Deserialize<'de> for HighestWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            shape: AlgebraShape,
            mu: Vec<i64>,
        }
        let raw = Raw::deserialize(d)?;
        let shape = AlgebraShape::new(raw.shape.m, raw.shape.n).map_err(serde::de::Error::custom)?;
        HighestWeight::new(shape, raw.mu).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mu.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Shifted label `l_{ij}`; depends only on the position `i` and the entry.
pub(crate) fn label_value(m: usize, i: usize, entry: i64) -> i64 {
    let (i, m) = (i as i64, m as i64);
    if i <= m {
        entry - i + m + 1
    } else {
        -entry + i - m
    }
}

/// Integer partition with positive, weakly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    /// Drops zero parts from a weakly decreasing list.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i`, 1-based, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=first)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// `λ_{m+1} ≤ n`.
    pub fn in_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) <= n
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions `σ ⊆ self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_padded(cur.clone()).expect("weakly decreasing"));
                return;
            }
            for p in (0..=outer[i].min(max)).rev() {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `μ_{ir} = λ_i` for `i ≤ m` and `μ_{m+i,r} = max(0, λ'_i − m)`.
pub fn weight_from_partition(lambda: &Partition, shape: AlgebraShape) -> Result<HighestWeight> {
    let (m, n) = (shape.m(), shape.n());
    if !lambda.in_hook(m, n) {
        return Err(Error::NotInHook(lambda.parts().to_vec(), m, n));
    }
    let conj = lambda.conjugate();
    let mut mu: Vec<i64> = (1..=m).map(|i| lambda.part(i) as i64).collect();
    mu.extend((1..=n).map(|i| conj.part(i).saturating_sub(m) as i64));
    HighestWeight::new(shape, mu)
}

/// Inverse of [`weight_from_partition`]: `λ_i = μ_{ir}` for `i ≤ m` and
/// `λ_{m+i} = #{j : μ_{m+j,r} ≥ i}`.
///
/// The counting runs over super components *at least* `i`; that is what
/// conjugating the super block of the diagram gives back.
pub fn partition_from_weight(mu: &HighestWeight) -> Partition {
    let shape = mu.shape();
    let (m, n) = (shape.m(), shape.n());
    let mut parts: Vec<usize> = (1..=m).map(|i| mu.get(i) as usize).collect();
    let top = (1..=n).map(|j| mu.get(m + j)).max().unwrap_or(0);
    for i in 1..=top {
        parts.push((1..=n).filter(|&j| mu.get(m + j) >= i).count());
    }
    Partition::from_padded(parts).expect("covariant weight yields a partition")
}

/// Result of the typicality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Typicality {
    pub typical: bool,
    /// Odd positive roots `β_{ip}` with `l_{ir} = l_{pr}`.
    pub atypical_roots: Vec<(usize, usize)>,
}

/// Typical iff `l_{ir} ≠ l_{pr}` for all `i ≤ m < p`.
pub fn is_typical(mu: &HighestWeight) -> Typicality {
    let shape = mu.shape();
    let mut roots = Vec::new();
    for i in 1..=shape.m() {
        for p in shape.m() + 1..=shape.r() {
            if mu.label(i) == mu.label(p) {
                roots.push((i, p));
            }
        }
    }
    Typicality {
        typical: roots.is_empty(),
        atypical_roots: roots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(m: usize, n: usize) -> AlgebraShape {
        AlgebraShape::new(m, n).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weight_from_partition_examples() {
        assert_eq!(
            weight_from_partition(&part(&[1]), sh(2, 3)).unwrap().components(),
            &[1, 0, 0, 0, 0]
        );
        assert_eq!(
            weight_from_partition(&part(&[3, 3, 2]), sh(2, 2)).unwrap().components(),
            &[3, 3, 1, 1]
        );
        assert_eq!(
            weight_from_partition(&part(&[2, 1]), sh(1, 1)).unwrap().components(),
            &[2, 1]
        );
        assert!(matches!(
            weight_from_partition(&part(&[2, 2, 2]), sh(1, 1)),
            Err(Error::NotInHook(..))
        ));
    }

    #[test]
    fn partition_from_weight_examples() {
        let hw = |m, n, v: &[i64]| HighestWeight::new(sh(m, n), v.to_vec()).unwrap();
        assert_eq!(partition_from_weight(&hw(2, 3, &[1, 0, 0, 0, 0])), part(&[1]));
        assert_eq!(partition_from_weight(&hw(2, 2, &[3, 3, 1, 1])), part(&[3, 3, 2]));
        assert_eq!(partition_from_weight(&hw(1, 1, &[2, 1])), part(&[2, 1]));
    }

    #[test]
    fn highest_weight_conditions() {
        assert!(HighestWeight::new(sh(2, 2), vec![1, 2, 0, 0]).is_err());
        // position m is exempt from dominance
        assert!(HighestWeight::new(sh(1, 2), vec![2, 2, 1]).is_ok());
        // cond2: mu_mr must dominate the count of positive super components
        let err = HighestWeight::new(sh(1, 2), vec![1, 1, 1]).unwrap_err();
        assert!(err.to_string().contains("cond2"), "{err}");
        assert!(HighestWeight::new(sh(1, 1), vec![0, 1]).is_err());
    }

    #[test]
    fn labels_and_typicality() {
        let mu = HighestWeight::new(sh(2, 3), vec![3, 2, 2, 1, 0]).unwrap();
        assert_eq!(mu.label(1), 5);
        assert_eq!(mu.label(3), -1);
        let t = is_typical(&HighestWeight::new(sh(1, 1), vec![1, 0]).unwrap());
        assert!(t.typical);
        let t = is_typical(&HighestWeight::new(sh(1, 1), vec![0, 0]).unwrap());
        assert_eq!(t.atypical_roots, vec![(1, 2)]);
    }

    #[test]
    fn partition_basics() {
        let p = part(&[3, 1]);
        assert_eq!(p.conjugate(), part(&[2, 1, 1]));
        assert_eq!(Partition::all_of_size(4).len(), 5);
        assert_eq!(part(&[2, 1]).subpartitions().len(), 5);
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
