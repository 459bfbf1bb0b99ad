use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::factor::{factorize_u64, squarefree_split};
use super::ArithError;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// A finite sum `Σ q_d √d` over distinct squarefree radicands `d ≥ 1`.
///
/// Terms are kept sorted by radicand with nonzero coefficients only, so two
/// values are equal exactly when their term lists are equal, and the value is
/// zero exactly when the term list is empty.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    terms: Vec<(u64, ExactRational)>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(ExactRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(ExactRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: ExactRational) -> Self {
        Self::term(q, 1)
    }

    /// `q · √d` for an arbitrary positive `d`; non-squarefree radicands are
    /// reduced.
    pub fn term(q: ExactRational, d: u64) -> Self {
        assert!(d > 0, "radicand must be positive");
        if q.is_zero() {
            return Self::zero();
        }
        let (k, s) = squarefree_u64(d);
        let coeff = q * ExactRational::from_integer(BigInt::from(k));
        Self {
            terms: vec![(s, coeff)],
        }
    }

    /// Builds a value from arbitrary `(radicand, coefficient)` pairs and
    /// canonicalizes it.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, ExactRational)>,
    {
        let mut acc = Self::zero();
        for (d, q) in terms {
            acc += Self::term(q, d);
        }
        acc
    }

    pub fn terms(&self) -> &[(u64, ExactRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value, if there is no irrational part.
    pub fn as_rational(&self) -> Option<ExactRational> {
        match self.terms.as_slice() {
            [] => Some(ExactRational::zero()),
            [(1, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// Returns `Some(n)` when the value is an integer that fits in `i64`.
    pub fn as_integer(&self) -> Option<i64> {
        let q = self.as_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn scale(&self, q: &ExactRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(d, c)| (*d, c * q)).collect(),
        }
    }

    /// Binary64 approximation for display. Never use it for zero tests.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, q)| q.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt())
            .sum()
    }

    /// Square of a single-term value, `(q√d)^2 = q^2 d`, with the sign of the
    /// value attached. Returns `None` for multi-term values.
    pub fn signed_square(&self) -> Option<ExactRational> {
        match self.terms.as_slice() {
            [] => Some(ExactRational::zero()),
            [(d, q)] => {
                let sq = q * q * ExactRational::from_integer(BigInt::from(*d));
                Some(if q.is_negative() { -sq } else { sq })
            }
            _ => None,
        }
    }

    /// Applies the field automorphism `√p ↦ -√p` for the prime `p`.
    fn conjugate_at(&self, p: u64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(d, q)| if d % p == 0 { (*d, -q.clone()) } else { (*d, q.clone()) })
                .collect(),
        }
    }

    /// Multiplicative inverse inside the multiquadratic field generated by the
    /// radicands. Multiplying by one conjugate per prime clears that prime from
    /// the radicands until only a rational norm is left.
    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut primes: Vec<u64> = self
            .terms
            .iter()
            .flat_map(|(d, _)| factorize_u64(*d).into_keys())
            .collect();
        primes.sort_unstable();
        primes.dedup();
        let mut norm = self.clone();
        let mut cofactor = Self::one();
        for p in primes {
            let conj = norm.conjugate_at(p);
            cofactor = &cofactor * &conj;
            norm = &norm * &conj;
        }
        let n = norm.as_rational().expect("norm over all conjugates is rational");
        Some(cofactor.scale(&n.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.checked_inv().map(|inv| self * &inv)
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &rhs.terms;
        let sgn = |q: &ExactRational| if negate_rhs { -q.clone() } else { q.clone() };
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, sgn(&b[j].1)));
                j += 1;
            } else {
                let s = if negate_rhs {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }
}

fn squarefree_u64(d: u64) -> (u64, u64) {
    let mut k = 1u64;
    let mut s = 1u64;
    for (p, e) in factorize_u64(d) {
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
    }
    (k, s)
}

/// Product of two squarefree radicands: `√a·√b = g·√(a/g · b/g)`.
fn radicand_product(a: u64, b: u64) -> (u64, u64) {
    let g = a.gcd(&b);
    let s = (a / g).checked_mul(b / g).expect("squarefree radicand exceeds 64 bits");
    (g, s)
}

/// Canonical `√q` for a nonnegative rational `q`.
pub fn sqrt_rational(q: &ExactRational) -> Result<RadicalScalar, ArithError> {
    if q.is_negative() {
        return Err(ArithError::NegativeRadicand(q.to_string()));
    }
    if q.is_zero() {
        return Ok(RadicalScalar::zero());
    }
    // √(a/b) = √(ab) / b
    let a = q.numer().magnitude();
    let b = q.denom().magnitude();
    let (k, s) = squarefree_split(&(a * b));
    let s = s.to_u64().ok_or_else(|| ArithError::RadicandOverflow(s.to_string()))?;
    let coeff = BigRational::new(
        BigInt::from_biguint(Sign::Plus, k),
        BigInt::from_biguint(Sign::Plus, b.clone()),
    );
    Ok(RadicalScalar {
        terms: vec![(s, coeff)],
    })
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<ExactRational> for RadicalScalar {
    fn from(q: ExactRational) -> Self {
        Self::from_rational(q)
    }
}

impl Add<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        self.merge(rhs, false)
    }
}

impl Sub<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        self.merge(rhs, true)
    }
}

impl Mul<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        if self.is_zero() || rhs.is_zero() {
            return RadicalScalar::zero();
        }
        if let [(1, q)] = self.terms.as_slice() {
            return rhs.scale(q);
        }
        if let [(1, q)] = rhs.terms.as_slice() {
            return self.scale(q);
        }
        let mut acc: Vec<(u64, ExactRational)> = Vec::new();
        for (da, qa) in &self.terms {
            for (db, qb) in &rhs.terms {
                let (k, s) = radicand_product(*da, *db);
                let c = qa * qb * ExactRational::from_integer(BigInt::from(k));
                acc.push((s, c));
            }
        }
        acc.sort_by_key(|(d, _)| *d);
        let mut terms: Vec<(u64, ExactRational)> = Vec::with_capacity(acc.len());
        for (d, c) in acc {
            match terms.last_mut() {
                Some((ld, lc)) if *ld == d => *lc += c,
                _ => terms.push((d, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        RadicalScalar { terms }
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar {
            terms: self.terms.iter().map(|(d, q)| (*d, -q.clone())).collect(),
        }
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(mut self) -> RadicalScalar {
        for (_, q) in &mut self.terms {
            *q = -q.clone();
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: RadicalScalar) -> RadicalScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: &RadicalScalar) -> RadicalScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<RadicalScalar> for &RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: RadicalScalar) -> RadicalScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &RadicalScalar) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl AddAssign<RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: RadicalScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: &RadicalScalar) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, true);
    }
}

impl Mul<&ExactRational> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &ExactRational) -> RadicalScalar {
        self.scale(rhs)
    }
}

impl Sum for RadicalScalar {
    fn sum<I: Iterator<Item = RadicalScalar>>(iter: I) -> Self {
        iter.fold(RadicalScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a RadicalScalar> for RadicalScalar {
    fn sum<I: Iterator<Item = &'a RadicalScalar>>(iter: I) -> Self {
        iter.fold(RadicalScalar::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (d, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let a = q.abs();
            match (*d, a.is_one()) {
                (1, _) => write!(f, "{a}")?,
                (d, true) => write!(f, "sqrt({d})")?,
                (d, false) => write!(f, "{a}*sqrt({d})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalScalar({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    radicand: u64,
    num: String,
    den: String,
}

impl Serialize for RadicalScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(d, q)| TermRepr {
                radicand: *d,
                num: q.numer().to_string(),
                den: q.denom().to_string(),
            })
            .collect();
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RadicalScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.len());
        for t in repr {
            if t.radicand == 0 {
                return Err(D::Error::custom("radicand must be positive"));
            }
            let num: BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((t.radicand, BigRational::new(num, den)));
        }
        Ok(Self::from_terms(terms))
    }
}

/// Parses a rational from `"a"` or `"a/b"`.
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            (!b.is_zero()).then(|| BigRational::new(a, b))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
