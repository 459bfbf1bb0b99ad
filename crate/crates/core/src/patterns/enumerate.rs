use super::gz::GZPattern;
use super::weight::HighestWeight;
use crate::exec::Exec;

/// Candidate values for each entry of row `p − 1` given row `p`, largest
/// first. Interval bounds come from conditions 2, 5 and 6; conditions 3 and 4
/// are checked afterwards by [`row_admissible`].
fn row_choices(m: usize, upper: &[i64]) -> Vec<Vec<i64>> {
    let p = upper.len();
    (1..p)
        .map(|i| {
            if p > m && i <= m {
                vec![upper[i - 1], upper[i - 1] - 1]
            } else {
                (upper[i]..=upper[i - 1]).rev().collect()
            }
        })
        .collect()
}

/// Row-local conditions that cannot be expressed as independent intervals.
fn row_admissible(m: usize, upper: &[i64], row: &[i64]) -> bool {
    let q = row.len();
    if q > m {
        // condition 5 and condition 3 for a super row
        if row[..m].windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        let positive = row[m..].iter().filter(|&&x| x > 0).count() as i64;
        row[m - 1] >= positive
    } else if q == m && upper.len() == m + 1 {
        // condition 4, plus dominance of row m which the rows below force anyway
        if upper[m - 1] == 0 && row[m - 1] != 0 {
            return false;
        }
        row.windows(2).all(|w| w[0] >= w[1]) && row[m - 1] >= 0
    } else {
        true
    }
}

fn rows_below(m: usize, upper: &[i64]) -> Vec<Vec<i64>> {
    let choices = row_choices(m, upper);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(choices.len());
    fn product(choices: &[Vec<i64>], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == choices.len() {
            out.push(cur.clone());
            return;
        }
        for &v in &choices[cur.len()] {
            cur.push(v);
            product(choices, cur, out);
            cur.pop();
        }
    }
    product(&choices, &mut cur, &mut out);
    out.retain(|row| row_admissible(m, upper, row));
    out
}

fn descend(m: usize, prefix: &mut Vec<i64>, upper: &[i64], out: &mut Vec<Vec<i64>>) {
    if upper.len() == 1 {
        out.push(prefix.clone());
        return;
    }
    for row in rows_below(m, upper) {
        let len = prefix.len();
        prefix.extend_from_slice(&row);
        descend(m, prefix, &row, out);
        prefix.truncate(len);
    }
}

/// All GZ patterns with top row `μ`, in basis order.
pub fn enumerate_patterns(mu: &HighestWeight) -> Vec<GZPattern> {
    enumerate_patterns_with(mu, Exec::default())
}

/// [`enumerate_patterns`] with an explicit execution strategy; branches under
/// distinct second rows are independent.
pub fn enumerate_patterns_with(mu: &HighestWeight, exec: Exec) -> Vec<GZPattern> {
    let shape = mu.shape();
    let m = shape.m();
    let top = mu.components().to_vec();
    if top.len() == 1 {
        return vec![GZPattern::from_entries(shape, top)];
    }
    let second_rows = rows_below(m, &top);
    let chunks = exec.map(&second_rows, |row| {
        let mut prefix = top.clone();
        prefix.extend_from_slice(row);
        let mut out = Vec::new();
        descend(m, &mut prefix, row, &mut out);
        out
    });
    chunks
        .into_iter()
        .flatten()
        .map(|entries| GZPattern::from_entries(shape, entries))
        .collect()
}

/// Number of patterns, i.e. the dimension of `V([μ])`.
pub fn dimension_of(mu: &HighestWeight) -> usize {
    fn count(m: usize, upper: &[i64]) -> usize {
        if upper.len() == 1 {
            return 1;
        }
        rows_below(m, upper).iter().map(|row| count(m, row)).sum()
    }
    count(mu.shape().m(), mu.components())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{AlgebraShape, HighestWeight};

    fn hw(m: usize, n: usize, v: &[i64]) -> HighestWeight {
        HighestWeight::new(AlgebraShape::new(m, n).unwrap(), v.to_vec()).unwrap()
    }

    #[test]
    fn gl11_natural() {
        let ps = enumerate_patterns(&hw(1, 1, &[1, 0]));
        let rows: Vec<_> = ps.iter().map(|p| p.rows()).collect();
        assert_eq!(rows, vec![vec![vec![1, 0], vec![1]], vec![vec![1, 0], vec![0]]]);
    }

    #[test]
    fn gl11_two_dimensional_for_all_k() {
        for k in 1..6 {
            assert_eq!(enumerate_patterns(&hw(1, 1, &[k, 0])).len(), 2);
        }
    }

    #[test]
    fn trivial_module() {
        let ps = enumerate_patterns(&hw(2, 3, &[0; 5]));
        assert_eq!(ps.len(), 1);
        assert!(ps[0].entries().iter().all(|&x| x == 0));
    }

    #[test]
    fn order_is_canonical_and_matches_count() {
        let mu = hw(2, 2, &[2, 1, 1, 0]);
        let ps = enumerate_patterns(&mu);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        assert!(ps.iter().all(|p| p.is_valid()));
        assert_eq!(ps.len(), dimension_of(&mu));
        let seq = enumerate_patterns_with(&mu, Exec::Sequential);
        assert_eq!(ps, seq);
    }
}
