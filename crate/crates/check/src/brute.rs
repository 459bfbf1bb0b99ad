//! Pattern enumeration by exhaustive filling: every row below the top takes
//! every vector in `0..=max` and is kept only if the six basis conditions
//! hold. Rows are indexed by length, `rows[p - 1]` has `p` entries.

/// `μ_{ip}` with 1-based `i` and row length `p`.
fn at(rows: &[Vec<i64>], i: usize, p: usize) -> i64 {
    rows[p - 1][i - 1]
}

fn nonneg(x: i64) -> bool {
    x >= 0
}

/// Conditions that involve row `p` and, where needed, row `p + 1`.
fn row_ok(rows: &[Vec<i64>], p: usize, m: usize, r: usize) -> bool {
    // condition 2 between rows p+1 and p
    if p + 1 > m && p < r {
        for i in 1..=m.min(p) {
            let t = at(rows, i, p + 1) - at(rows, i, p);
            if t != 0 && t != 1 {
                return false;
            }
        }
    }
    // condition 3 on row p
    if p > m {
        let count = (m + 1..=p).filter(|&i| at(rows, i, p) > 0).count() as i64;
        if at(rows, m, p) < count {
            return false;
        }
    }
    // condition 4
    if p == m && r > m && at(rows, m, m + 1) == 0 && at(rows, m, m + 1) - at(rows, m, m) != 0 {
        return false;
    }
    // condition 5 on row p
    if p > m && p < r {
        for i in 1..m {
            if !nonneg(at(rows, i, p) - at(rows, i + 1, p)) {
                return false;
            }
        }
    }
    // condition 6: betweenness of row p inside row p+1, even and odd triangles
    if p < r {
        for i in 1..=p {
            let even = i <= m.saturating_sub(1) && p < m;
            let odd = i > m && p > m;
            if (even || odd)
                && !(nonneg(at(rows, i, p + 1) - at(rows, i, p)) && nonneg(at(rows, i, p) - at(rows, i + 1, p + 1)))
            {
                return false;
            }
        }
    }
    rows[p - 1].iter().all(|&x| x >= 0)
}

fn all_rows(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// All patterns with top row `top` for `gl(m|n)`, rows listed top first,
/// sorted descending lexicographically on the flattened entries.
pub fn patterns(top: &[i64], m: usize, n: usize) -> Vec<Vec<Vec<i64>>> {
    let r = m + n;
    let max = top.iter().copied().max().unwrap_or(0);
    let mut rows: Vec<Vec<i64>> = (1..=r).map(|p| vec![0; p]).collect();
    rows[r - 1] = top.to_vec();
    let mut out = Vec::new();
    fn rec(p: usize, m: usize, r: usize, max: i64, rows: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
        if p == 0 {
            out.push(rows.iter().rev().cloned().collect());
            return;
        }
        for cand in all_rows(p, max) {
            rows[p - 1] = cand;
            if row_ok(rows, p, m, r) {
                rec(p - 1, m, r, max, rows, out);
            }
        }
    }
    if r > 1 {
        rec(r - 1, m, r, max, &mut rows, &mut out);
    } else {
        out.push(vec![top.to_vec()]);
    }
    out.sort_by_key(|p| std::cmp::Reverse(p.concat()));
    out
}
