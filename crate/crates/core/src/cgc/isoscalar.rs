//! Isoscalar factors for `V([μ]) ⊗ V([1,0,…,0])` along the chain
//! `gl(m|n) ⊃ gl(m|n−1) ⊃ … ⊃ gl(m) ⊃ gl(m−1) ⊃ … ⊃ gl(1)`.

use serde::Serialize;

use crate::arith::{RadicalScalar, RootFactors, RootValue};
use crate::error::{Error, Result};
use crate::patterns::GZPattern;

/// Identifies one isoscalar factor at a given level of the chain.
///
/// `level` is the length `L` of the upper row; the upper weight is raised in
/// position `k`. With `epsilon = 1` the lower row (length `L − 1`) is raised
/// in position `q`; with `epsilon = 0` it is unchanged and `q` is ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IsoscalarKey {
    pub level: usize,
    pub k: usize,
    pub epsilon: u8,
    pub q: usize,
}

impl IsoscalarKey {
    pub fn unchanged(level: usize, k: usize) -> Self {
        Self {
            level,
            k,
            epsilon: 0,
            q: 0,
        }
    }

    pub fn raised(level: usize, k: usize, q: usize) -> Self {
        Self {
            level,
            k,
            epsilon: 1,
            q,
        }
    }
}

/// `S(k, q)`: `+1` for `k ≤ q`, `−1` otherwise.
pub fn s_sign(k: usize, q: usize) -> i64 {
    if k <= q {
        1
    } else {
        -1
    }
}

fn finish(f: &RootFactors, key: &IsoscalarKey) -> Result<RadicalScalar> {
    match f.evaluate() {
        Ok(RootValue::Zero) => Ok(RadicalScalar::zero()),
        Ok(RootValue::Value(v)) => Ok(v),
        Err(source) => Err(Error::Formula {
            context: format!("isoscalar factor {key:?}"),
            source,
        }),
    }
}

/// Evaluates the isoscalar factor `key`, reading the upper and lower weights
/// from rows `key.level` and `key.level − 1` of `bra`.
pub fn isoscalar_factor(bra: &GZPattern, key: IsoscalarKey) -> Result<RadicalScalar> {
    let shape = bra.shape();
    let (m, l) = (shape.m(), key.level);
    let bad = |msg: &str| Error::IndexOutOfRange(format!("{key:?}: {msg}"));
    if l == 0 || l > shape.r() {
        return Err(bad("level outside 1..=r"));
    }
    if key.k == 0 || key.k > l {
        return Err(bad("k outside 1..=level"));
    }
    if key.epsilon > 1 || (key.epsilon == 1 && (key.q == 0 || key.q >= l)) {
        return Err(bad("q outside 1..level"));
    }
    let f = if l <= m {
        classical(bra, key)
    } else if key.epsilon == 0 {
        if key.k <= m {
            liso1(bra, key)
        } else {
            liso2(bra, key)
        }
    } else {
        match (key.k <= m, key.q <= m) {
            (true, true) => liso3(bra, key),
            (true, false) => liso4(bra, key),
            (false, true) => liso5(bra, key),
            (false, false) => liso6(bra, key),
        }
    };
    finish(&f, &key)
}

/// Classical `gl(L) ⊃ gl(L−1)` factors for the natural representation.
fn classical(bra: &GZPattern, key: IsoscalarKey) -> RootFactors {
    let (lv, k) = (key.level, key.k);
    let up = |i: usize| bra.label(i, lv);
    let lo = |i: usize| bra.label(i, lv - 1);
    let mut f = RootFactors::new();
    if key.epsilon == 0 {
        for i in 1..lv {
            f.num(up(k) - lo(i) + 1);
        }
        for i in (1..=lv).filter(|&i| i != k) {
            f.den(up(k) - up(i));
        }
    } else {
        let q = key.q;
        f.sign_power(i64::from(s_sign(k, q) < 0));
        for i in (1..lv).filter(|&i| i != q) {
            f.num(up(k) - lo(i) + 1).den(lo(q) - lo(i) + 1);
        }
        for i in (1..=lv).filter(|&i| i != k) {
            f.num(lo(q) - up(i)).den(up(k) - up(i));
        }
    }
    f
}

struct Rows<'a> {
    bra: &'a GZPattern,
    m: usize,
    r: usize,
}

impl Rows<'_> {
    fn up(&self, i: usize) -> i64 {
        self.bra.label(i, self.r)
    }
    fn lo(&self, i: usize) -> i64 {
        self.bra.label(i, self.r - 1)
    }
    fn theta(&self, i: usize) -> i64 {
        self.bra.get(i, self.r) - self.bra.get(i, self.r - 1)
    }
}

fn rows(bra: &GZPattern, key: IsoscalarKey) -> Rows<'_> {
    Rows {
        bra,
        m: bra.shape().m(),
        r: key.level,
    }
}

fn liso1(bra: &GZPattern, key: IsoscalarKey) -> RootFactors {
    let w = rows(bra, key);
    let (m, r, k) = (w.m, w.r, key.k);
    let mut f = RootFactors::new();
    let th: i64 = (k..=m).map(|i| w.theta(i)).sum();
    f.sign_power(k as i64 - 1 + th);
    for i in (1..=m).filter(|&i| i != k) {
        f.num(w.up(k) - w.up(i) + 1).den(w.up(k) - w.lo(i));
    }
    for p in m + 1..r {
        f.num(w.up(k) - w.lo(p));
    }
    for p in m + 1..=r {
        f.den(w.up(k) - w.up(p) + 1);
    }
    f
}

fn liso2(bra: &GZPattern, key: IsoscalarKey) -> RootFactors {
    let w = rows(bra, key);
    let (m, r, k) = (w.m, w.r, key.k);
    let mut f = RootFactors::new();
    for i in 1..=m {
        f.num(w.up(i) - w.up(k)).den(w.lo(i) - w.up(k) + 1);
    }
    for p in m + 1..r {
        f.num(w.lo(p) - w.up(k) + 1);
    }
    for p in (m + 1..=r).filter(|&p| p != k) {
        f.den(w.up(p) - w.up(k));
    }
    f
}

fn liso3(bra: &GZPattern, key: IsoscalarKey) -> RootFactors {
    let w = rows(bra, key);
    let (m, r, k, q) = (w.m, w.r, key.k, key.q);
    let dkq = i64::from(k == q);
    let mut f = RootFactors::new();
    let th: i64 = (k.min(q) + 1..=k.max(q).saturating_sub(1)).map(|i| w.theta(i)).sum();
    f.sign_power((k + q) as i64 + th);
    if k != q {
        f.outer_den(w.up(k) - w.up(q));
    }
    if w.theta(q) == 1 {
        for i in (1..=m).filter(|&i| i != k && i != q) {
            f.num(w.lo(i) - w.lo(k) - 1 - dkq + 2 * w.theta(i))
                .num(w.lo(i) - w.lo(q));
            f.den(w.up(i) - w.up(k)).den(w.up(i) - w.up(q));
        }
        for p in m + 1..=r {
            f.num(w.up(q) - w.up(p)).den(w.up(k) - w.up(p) + 1);
        }
        for p in m + 1..r {
            f.num(w.up(k) - w.lo(p)).den(w.lo(q) - w.lo(p));
        }
    }
    f
}

fn liso4(bra: &GZPattern, key: IsoscalarKey) -> RootFactors {
    let w = rows(bra, key);
    let (m, r, k, q) = (w.m, w.r, key.k, key.q);
    let mut f = RootFactors::new();
    let th: i64 = (1..k).map(|i| w.theta(i)).sum();
    f.sign_power(k as i64 + th);
    f.den(w.up(k) - w.lo(q));
    for i in (1..=m).filter(|&i| i != k) {
        f.num(w.lo(i) - w.lo(k) - 1 + 2 * w.theta(i)).num(w.lo(i) - w.lo(q) + 1);
        f.den(w.up(i) - w.up(k)).den(w.up(i) - w.lo(q));
    }
    for p in m + 1..=r {
        f.num((w.up(p) - w.lo(q)).abs()).den(w.up(k) - w.up(p) + 1);
    }
    for p in (m + 1..r).filter(|&p| p != q) {
        f.num(w.up(k) - w.lo(p)).den((w.lo(p) - w.lo(q) + 1).abs());
    }
    f
}

fn liso5(bra: &GZPattern, key: IsoscalarKey) -> RootFactors {
    let w = rows(bra, key);
    let (m, r, k, q) = (w.m, w.r, key.k, key.q);
    let mut f = RootFactors::new();
    let th: i64 = (q + 1..=m).map(|i| w.theta(i)).sum();
    f.sign_power(q as i64 + th);
    f.den(w.up(q) - w.up(k) + 1);
    for i in 1..=m {
        f.num(w.up(i) - w.up(k)).den(w.lo(i) - w.up(k) + 1);
    }
    for i in (1..=m).filter(|&i| i != q) {
        f.num((w.lo(q) - w.lo(i)).abs()).den((w.up(q) - w.up(i)).abs());
    }
    for p in (m + 1..=r).filter(|&p| p != k) {
        f.num((w.up(q) - w.up(p)).abs()).den((w.up(p) - w.up(k)).abs());
    }
    for p in m + 1..r {
        f.num((w.lo(p) - w.up(k) + 1).abs()).den((w.up(q) - w.lo(p) - 1).abs());
    }
    f
}

fn liso6(bra: &GZPattern, key: IsoscalarKey) -> RootFactors {
    let w = rows(bra, key);
    let (m, r, k, q) = (w.m, w.r, key.k, key.q);
    let mut f = RootFactors::new();
    let th: i64 = (1..=m).map(|i| w.theta(i)).sum();
    f.sign_power(i64::from(s_sign(k, q) < 0) + th);
    for i in 1..=m {
        f.num(w.up(i) - w.up(k)).num(w.lo(i) - w.lo(q) + 1);
        f.den(w.lo(i) - w.up(k) + 1).den(w.up(i) - w.lo(q));
    }
    for p in (m + 1..=r).filter(|&p| p != k) {
        f.num((w.up(p) - w.lo(q)).abs()).den((w.up(p) - w.up(k)).abs());
    }
    for p in (m + 1..r).filter(|&p| p != q) {
        f.num((w.lo(p) - w.up(k) + 1).abs()).den((w.lo(p) - w.lo(q) + 1).abs());
    }
    f
}
