//! Clebsch-Gordan coefficients from first principles: the highest-weight
//! vector of each summand is the kernel of all raising operators on the
//! product space, and every other coupled vector is fixed by the raising
//! equations `Δ(e_i) u_p = Σ_{p'} (e_i)_{p'p} u_{p'}` plus orthogonality to
//! the other summands. Vectors are left unnormalized; the common scale of a
//! summand is `N = |u_hw|²`.

use std::collections::BTreeMap;

use glmn::action::{Generator, Representation};
use glmn::arith::RadicalScalar;
use glmn::cgc::CgcTable;
use glmn::linalg::{RowEchelon, SparseVector};
use glmn::patterns::{Grading, HighestWeight};
use glmn::sparse::SparseMatrix;
use glmn::Exec;

pub struct OracleBlock {
    pub k: usize,
    pub weight: HighestWeight,
    /// `u_p` for every pattern of the summand, in its basis order, as vectors
    /// over product indices `bra · r + (j − 1)`.
    pub vectors: Vec<Vec<RadicalScalar>>,
    pub norm_sq: RadicalScalar,
}

pub struct Oracle {
    pub r: usize,
    pub dim: usize,
    pub blocks: Vec<OracleBlock>,
}

fn weight_of(rep: &Representation, i: usize) -> Vec<i64> {
    rep.basis().pattern(i).weight().0
}

fn dot(a: &[RadicalScalar], b: &[RadicalScalar]) -> RadicalScalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

pub fn build(mu: &HighestWeight, grading: Grading) -> Oracle {
    let shape = mu.shape();
    let r = shape.r();
    let left = Representation::with_exec(mu, Exec::Sequential).unwrap();
    let mut nat = vec![0; r];
    nat[0] = 1;
    let right = Representation::with_exec(&HighestWeight::new(shape, nat).unwrap(), Exec::Sequential).unwrap();
    // natural basis position -> j, where j counts the rows that start with 1
    let j_of: Vec<usize> = right
        .basis()
        .patterns()
        .iter()
        .map(|p| (1..=r).filter(|&row| p.get(1, row) == 1).count())
        .collect();
    let dim = left.dim();
    let n_prod = dim * r;
    let idx = |x: usize, y: usize| x * r + (j_of[y] - 1);
    let mut prod_weight = vec![Vec::new(); n_prod];
    for x in 0..dim {
        for y in 0..r {
            let w: Vec<i64> = weight_of(&left, x)
                .iter()
                .zip(weight_of(&right, y))
                .map(|(a, b)| a + b)
                .collect();
            prod_weight[idx(x, y)] = w;
        }
    }
    let delta = |g: Generator| -> SparseMatrix {
        let a = &left.get(g).unwrap().matrix;
        let b = &right.get(g).unwrap().matrix;
        let odd = matches!(g, Generator::E(k) | Generator::F(k) if k == shape.m() && shape.n() > 0);
        let mut cols = vec![Vec::new(); n_prod];
        for x in 0..dim {
            let sign_odd = odd && left.basis().pattern(x).parity(grading).is_odd();
            for y in 0..r {
                let c = idx(x, y);
                for (x2, v) in a.column(x) {
                    cols[c].push((idx(*x2, y), v.clone()));
                }
                for (y2, v) in b.column(y) {
                    let v = if sign_odd { -v } else { v.clone() };
                    cols[c].push((idx(x, *y2), v));
                }
            }
        }
        SparseMatrix::from_columns(n_prod, cols)
    };
    let raise: Vec<SparseMatrix> = (1..r).map(|i| delta(Generator::E(i))).collect();

    let space = |w: &[i64]| -> Vec<usize> { (0..n_prod).filter(|&c| prod_weight[c] == w).collect() };

    // Solve Σ_i rows of Δ(e_i) restricted to `cols` against right-hand sides.
    let solve = |cols: &[usize], rhs: &[Vec<RadicalScalar>], extra: &[Vec<RadicalScalar>]| -> RowEchelon {
        let nv = cols.len();
        let mut ech = RowEchelon::new(nv);
        for (i, e) in raise.iter().enumerate() {
            let mut eqs: BTreeMap<usize, SparseVector> = BTreeMap::new();
            for (ci, &c) in cols.iter().enumerate() {
                for (row, v) in e.column(c) {
                    eqs.entry(*row).or_default().insert(ci, v.clone());
                }
            }
            for (row, target) in rhs
                .get(i)
                .map(|t| {
                    t.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(r, v)| (r, v.clone()))
                        .collect::<Vec<_>>()
                })
                .unwrap_or_default()
            {
                eqs.entry(row).or_default().insert(nv, target);
            }
            for (_, eq) in eqs {
                ech.insert(eq);
            }
        }
        for v in extra {
            let eq: SparseVector = cols
                .iter()
                .enumerate()
                .filter(|(_, &c)| !v[c].is_zero())
                .map(|(ci, &c)| (ci, v[c].clone()))
                .collect();
            ech.insert(eq);
        }
        ech
    };

    let summands: Vec<(usize, HighestWeight)> = (1..=r)
        .filter_map(|k| {
            let mut w = mu.components().to_vec();
            w[k - 1] += 1;
            HighestWeight::new(shape, w).ok().map(|w| (k, w))
        })
        .collect();

    let mut hwvs: Vec<(Vec<i64>, Vec<RadicalScalar>)> = Vec::new();
    for (_, w) in &summands {
        let cols = space(w.components());
        let ech = solve(&cols, &[], &[]);
        let ker = ech.kernel();
        assert_eq!(ker.len(), 1, "highest-weight space of {w:?} must be one-dimensional");
        let mut v = vec![RadicalScalar::zero(); n_prod];
        for (ci, &c) in cols.iter().enumerate() {
            v[c] = ker[0][ci].clone();
        }
        hwvs.push((w.components().to_vec(), v));
    }

    let mut blocks = Vec::new();
    for (bi, (k, w)) in summands.iter().enumerate() {
        let rep = Representation::with_exec(w, Exec::Sequential).unwrap();
        let mut vectors: Vec<Vec<RadicalScalar>> = vec![hwvs[bi].1.clone()];
        for p in 1..rep.dim() {
            let wp = weight_of(&rep, p);
            let cols = space(&wp);
            let rhs: Vec<Vec<RadicalScalar>> = (1..r)
                .map(|i| {
                    let mut t = vec![RadicalScalar::zero(); n_prod];
                    for (p2, v) in rep.e(i).matrix.column(p) {
                        for (c, x) in vectors[*p2].iter().enumerate() {
                            if !x.is_zero() {
                                t[c] += v * x;
                            }
                        }
                    }
                    t
                })
                .collect();
            let others: Vec<Vec<RadicalScalar>> = hwvs
                .iter()
                .enumerate()
                .filter(|(o, (hw, _))| *o != bi && *hw == wp)
                .map(|(_, (_, v))| v.clone())
                .collect();
            let ech = solve(&cols, &rhs, &others);
            assert!(
                ech.is_consistent(),
                "raising equations inconsistent at {}",
                rep.basis().pattern(p)
            );
            assert_eq!(
                ech.rank(),
                cols.len(),
                "coupled vector not unique at {}",
                rep.basis().pattern(p)
            );
            let x = ech.particular_solution().unwrap();
            let mut v = vec![RadicalScalar::zero(); n_prod];
            for (ci, &c) in cols.iter().enumerate() {
                v[c] = x[ci].clone();
            }
            vectors.push(v);
        }
        let norm_sq = dot(&vectors[0], &vectors[0]);
        blocks.push(OracleBlock {
            k: *k,
            weight: w.clone(),
            vectors,
            norm_sq,
        });
    }
    Oracle { r, dim, blocks }
}

/// Checks that every block of `table` is the oracle block times one scalar
/// `c` with `c²·N = 1`. The error names the first mismatching entry.
pub fn compare(oracle: &Oracle, table: &CgcTable) -> Result<(), String> {
    if oracle.blocks.len() != table.blocks.len() {
        return Err(format!(
            "{} oracle blocks, {} table blocks",
            oracle.blocks.len(),
            table.blocks.len()
        ));
    }
    for (ob, tb) in oracle.blocks.iter().zip(&table.blocks) {
        if ob.k != tb.k || ob.weight != tb.weight {
            return Err(format!("block order differs at k={}", ob.k));
        }
        let hw = &ob.vectors[0];
        let c = hw
            .iter()
            .position(|x| !x.is_zero())
            .ok_or("zero highest-weight vector")?;
        let scale = tb
            .matrix
            .get(c, 0)
            .checked_div(&hw[c])
            .ok_or_else(|| format!("k={}: table misses oracle support", ob.k))?;
        if &(&scale * &scale) * &ob.norm_sq != RadicalScalar::one() {
            return Err(format!("k={}: scale {scale} is not a unit", ob.k));
        }
        for (p, u) in ob.vectors.iter().enumerate() {
            for (row, x) in u.iter().enumerate() {
                if tb.matrix.get(row, p) != &scale * x {
                    return Err(format!(
                        "k={} ket {p} row {row}: {} vs {}",
                        ob.k,
                        tb.matrix.get(row, p),
                        &scale * x
                    ));
                }
            }
        }
    }
    Ok(())
}
