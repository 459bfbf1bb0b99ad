//! Brute-force super semistandard tableaux, used as a dimension and character
//! oracle.

use std::collections::BTreeMap;

/// Content vectors (length `m + n`) of every `(m|n)` semistandard filling of
/// shape `lambda`: letters `1..m` weakly increase along rows and strictly down
/// columns, letters `m+1..m+n` strictly along rows and weakly down columns,
/// and even letters precede odd ones.
pub fn super_tableaux(lambda: &[usize], m: usize, n: usize) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
    let mut content = vec![0i64; m + n];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        m: usize,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<i64>,
        out: &mut BTreeMap<Vec<i64>, u64>,
    ) {
        if idx == cells.len() {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[idx];
        for v in 1..=m + n {
            let odd = v > m;
            if j > 0 {
                let left = grid[i][j - 1];
                if left > v || (odd && left == v) {
                    continue;
                }
            }
            if i > 0 {
                let up = grid[i - 1][j];
                if up > v || (!odd && up == v) {
                    continue;
                }
            }
            grid[i][j] = v;
            content[v - 1] += 1;
            rec(idx + 1, cells, m, n, grid, content, out);
            content[v - 1] -= 1;
        }
    }
    rec(0, &cells, m, n, &mut grid, &mut content, &mut out);
    out
}

pub fn super_tableau_count(lambda: &[usize], m: usize, n: usize) -> u64 {
    super_tableaux(lambda, m, n).values().sum()
}
