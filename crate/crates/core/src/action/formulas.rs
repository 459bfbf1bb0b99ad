//! Matrix elements of the Chevalley generators in the GZ basis.

use serde::Serialize;

use crate::arith::{RadicalScalar, RootFactors, RootValue};
use crate::error::{Error, Result};
use crate::patterns::GZPattern;

/// One term `c · |μ')` of a generator applied to a basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternTerm {
    pub pattern: GZPattern,
    pub coefficient: RadicalScalar,
}

fn check_index(k: usize, max: usize, what: &str) -> Result<()> {
    if k == 0 || k > max {
        Err(Error::IndexOutOfRange(format!("{what}_{k}, allowed 1..={max}")))
    } else {
        Ok(())
    }
}

/// `h_k|μ) = (Σ_j μ_{jk} − Σ_j μ_{j,k−1}) |μ)`.
pub fn act_h(k: usize, p: &GZPattern) -> Result<RadicalScalar> {
    check_index(k, p.shape().r(), "h")?;
    Ok(RadicalScalar::from_integer(p.row_sum(k) - p.row_sum(k - 1)))
}

/// Collects one term if the shifted pattern is in the module and the
/// coefficient survives zero cancellation.
fn push_term(
    out: &mut Vec<PatternTerm>,
    source: &GZPattern,
    target: GZPattern,
    factors: &RootFactors,
    what: &str,
) -> Result<()> {
    match factors.evaluate() {
        Ok(RootValue::Zero) => Ok(()),
        Ok(RootValue::Value(coefficient)) => {
            out.push(PatternTerm {
                pattern: target,
                coefficient,
            });
            Ok(())
        }
        Err(source_err) => Err(Error::Formula {
            context: format!("{what} on {source} -> {target}"),
            source: source_err,
        }),
    }
}

/// `e_k|μ)`: raises one entry of row `k`.
pub fn act_e(k: usize, p: &GZPattern) -> Result<Vec<PatternTerm>> {
    let shape = p.shape();
    check_index(k, shape.r() - 1, "e")?;
    let m = shape.m();
    let l = |i: usize, j: usize| p.label(i, j);
    let mut out = Vec::new();
    let what = format!("e_{k}");

    if k < m {
        for j in 1..=k {
            let target = p.shifted(j, k, 1);
            if !target.is_valid() {
                continue;
            }
            let ljk = l(j, k);
            let mut f = RootFactors::new();
            f.num(-1);
            for i in 1..=k + 1 {
                f.num(l(i, k + 1) - ljk);
            }
            for i in 1..k {
                f.num(l(i, k - 1) - ljk - 1);
            }
            for i in (1..=k).filter(|&i| i != j) {
                f.den(l(i, k) - ljk).den(l(i, k) - ljk - 1);
            }
            push_term(&mut out, p, target, &f, &what)?;
        }
    } else if k == m {
        for i in 1..=m {
            if p.theta(i, m) != 1 {
                continue;
            }
            let target = p.shifted(i, m, 1);
            if !target.is_valid() {
                continue;
            }
            push_term(&mut out, p, target, &odd_factors(p, i), &what)?;
        }
    } else {
        let pp = k;
        for i in 1..=m {
            if p.theta(i, pp) != 1 || p.theta(i, pp - 1) != 0 {
                continue;
            }
            let target = p.shifted(i, pp, 1);
            if !target.is_valid() {
                continue;
            }
            push_term(&mut out, p, target, &mixed_factors(p, i, pp), &what)?;
        }
        for s in m + 1..=pp {
            let target = p.shifted(s, pp, 1);
            if !target.is_valid() {
                continue;
            }
            let lsp = l(s, pp);
            let mut f = RootFactors::new();
            f.num(-1);
            for q in m + 1..pp {
                f.num(l(q, pp - 1) - lsp + 1);
            }
            for q in m + 1..=pp + 1 {
                f.num(l(q, pp + 1) - lsp);
            }
            for q in (m + 1..=pp).filter(|&q| q != s) {
                f.den(l(q, pp) - lsp).den(l(q, pp) - lsp + 1);
            }
            for kk in 1..=m {
                f.num(l(kk, pp) - lsp).num(l(kk, pp) - lsp + 1);
                f.den(l(kk, pp + 1) - lsp).den(l(kk, pp - 1) - lsp + 1);
            }
            push_term(&mut out, p, target, &f, &what)?;
        }
    }
    Ok(out)
}

/// `f_k|μ)`: lowers one entry of row `k`.
pub fn act_f(k: usize, p: &GZPattern) -> Result<Vec<PatternTerm>> {
    let shape = p.shape();
    check_index(k, shape.r() - 1, "f")?;
    let m = shape.m();
    let l = |i: usize, j: usize| p.label(i, j);
    let mut out = Vec::new();
    let what = format!("f_{k}");

    if k < m {
        for j in 1..=k {
            let target = p.shifted(j, k, -1);
            if !target.is_valid() {
                continue;
            }
            let ljk = l(j, k);
            let mut f = RootFactors::new();
            f.num(-1);
            for i in 1..=k + 1 {
                f.num(l(i, k + 1) - ljk + 1);
            }
            for i in 1..k {
                f.num(l(i, k - 1) - ljk);
            }
            for i in (1..=k).filter(|&i| i != j) {
                f.den(l(i, k) - ljk + 1).den(l(i, k) - ljk);
            }
            push_term(&mut out, p, target, &f, &what)?;
        }
    } else if k == m {
        for i in 1..=m {
            if p.theta(i, m) != 0 {
                continue;
            }
            let target = p.shifted(i, m, -1);
            if !target.is_valid() {
                continue;
            }
            push_term(&mut out, p, target, &odd_factors(p, i), &what)?;
        }
    } else {
        let pp = k;
        for i in 1..=m {
            if p.theta(i, pp - 1) != 1 || p.theta(i, pp) != 0 {
                continue;
            }
            let target = p.shifted(i, pp, -1);
            if !target.is_valid() {
                continue;
            }
            push_term(&mut out, p, target, &mixed_factors(p, i, pp), &what)?;
        }
        for s in m + 1..=pp {
            let target = p.shifted(s, pp, -1);
            if !target.is_valid() {
                continue;
            }
            let lsp = l(s, pp);
            let mut f = RootFactors::new();
            f.num(-1);
            for q in m + 1..pp {
                f.num(l(q, pp - 1) - lsp);
            }
            for q in m + 1..=pp + 1 {
                f.num(l(q, pp + 1) - lsp - 1);
            }
            for q in (m + 1..=pp).filter(|&q| q != s) {
                f.den(l(q, pp) - lsp - 1).den(l(q, pp) - lsp);
            }
            for kk in 1..=m {
                f.num(l(kk, pp) - lsp - 1).num(l(kk, pp) - lsp);
                f.den(l(kk, pp + 1) - lsp - 1).den(l(kk, pp - 1) - lsp);
            }
            push_term(&mut out, p, target, &f, &what)?;
        }
    }
    Ok(out)
}

/// Coefficient shared by `e_m` and `f_m` for entry `i` of row `m`.
fn odd_factors(p: &GZPattern, i: usize) -> RootFactors {
    let m = p.shape().m();
    let l = |a: usize, b: usize| p.label(a, b);
    let li = l(i, m + 1);
    let mut f = RootFactors::new();
    let before: i64 = (1..i).map(|t| p.theta(t, m)).sum();
    f.sign_power(i as i64 - 1 + before);
    f.num(li - l(m + 1, m + 1));
    for kk in 1..m {
        f.num(l(kk, m - 1) - li);
    }
    for kk in (1..=m).filter(|&kk| kk != i) {
        f.den(l(kk, m + 1) - li);
    }
    f
}

/// First-sum coefficient of `e_p`/`f_p` (`p > m`) for entry `i ≤ m`.
fn mixed_factors(p: &GZPattern, i: usize, pp: usize) -> RootFactors {
    let m = p.shape().m();
    let l = |a: usize, b: usize| p.label(a, b);
    let li = l(i, pp + 1);
    let mut f = RootFactors::new();
    let sign: i64 = (1..i).map(|t| p.theta(t, pp)).sum::<i64>() + (i + 1..=m).map(|t| p.theta(t, pp - 1)).sum::<i64>();
    f.sign_power(sign);
    for kk in (1..=m).filter(|&kk| kk != i) {
        f.num(li - l(kk, pp)).num(li - l(kk, pp) - 1);
        f.den(li - l(kk, pp + 1)).den(li - l(kk, pp - 1) - 1);
    }
    for q in m + 1..pp {
        f.num(li - l(q, pp - 1) - 1);
    }
    for q in m + 1..=pp + 1 {
        f.num(li - l(q, pp + 1));
    }
    for q in m + 1..=pp {
        f.den(li - l(q, pp) - 1).den(li - l(q, pp));
    }
    f
}
