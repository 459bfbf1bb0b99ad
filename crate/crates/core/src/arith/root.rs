use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::factor::factorize_u64;
use super::{ArithError, ExactRational, RadicalScalar};

/// A signed square root of a ratio of integer products, kept as explicit
/// factor lists until evaluation:
///
/// `sign · outer · ( Π num / Π den )^{1/2}`
///
/// Matching zero factors in the numerator and denominator cancel before
/// anything is divided. The radicand is reduced prime by prime, so no large
/// intermediate product is ever factored.
#[derive(Clone, Debug)]
pub struct RootFactors {
    negative: bool,
    outer_num: Vec<i64>,
    outer_den: Vec<i64>,
    num: Vec<i64>,
    den: Vec<i64>,
}

/// Result of evaluating a [`RootFactors`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootValue {
    /// A zero survived in the numerator after cancellation.
    Zero,
    Value(RadicalScalar),
}

impl Default for RootFactors {
    fn default() -> Self {
        Self::new()
    }
}

impl RootFactors {
    pub fn new() -> Self {
        Self {
            negative: false,
            outer_num: Vec::new(),
            outer_den: Vec::new(),
            num: Vec::new(),
            den: Vec::new(),
        }
    }

    /// Multiplies the outer sign by `(-1)^exponent`.
    pub fn sign_power(&mut self, exponent: i64) -> &mut Self {
        if exponent.rem_euclid(2) == 1 {
            self.negative = !self.negative;
        }
        self
    }

    pub fn negate(&mut self) -> &mut Self {
        self.negative = !self.negative;
        self
    }

    /// Factor under the root, numerator side.
    pub fn num(&mut self, x: i64) -> &mut Self {
        self.num.push(x);
        self
    }

    /// Factor under the root, denominator side.
    pub fn den(&mut self, x: i64) -> &mut Self {
        self.den.push(x);
        self
    }

    /// Rational factor outside the root, numerator side.
    pub fn outer_num(&mut self, x: i64) -> &mut Self {
        self.outer_num.push(x);
        self
    }

    /// Rational factor outside the root, denominator side.
    pub fn outer_den(&mut self, x: i64) -> &mut Self {
        self.outer_den.push(x);
        self
    }

    /// Evaluates the expression exactly.
    ///
    /// Fails with [`ArithError::ZeroDenominator`] when more zeros sit in a
    /// denominator than in the matching numerator, and with
    /// [`ArithError::NegativeRadicand`] when the net radicand is negative.
    pub fn evaluate(&self) -> Result<RootValue, ArithError> {
        let zeros = |v: &[i64]| v.iter().filter(|&&x| x == 0).count();
        let (zn, zd) = (zeros(&self.num), zeros(&self.den));
        let (on, od) = (zeros(&self.outer_num), zeros(&self.outer_den));
        if zd > zn || od > on {
            return Err(ArithError::ZeroDenominator(format!("{self:?}")));
        }
        if zn > zd || on > od {
            return Ok(RootValue::Zero);
        }

        let mut radicand_negative = false;
        let mut exps: BTreeMap<u64, i64> = BTreeMap::new();
        let mut absorb = |xs: &[i64], sign: i64, neg: &mut bool| {
            for &x in xs.iter().filter(|&&x| x != 0) {
                if x < 0 {
                    *neg = !*neg;
                }
                for (p, e) in factorize_u64(x.unsigned_abs()) {
                    *exps.entry(p).or_insert(0) += sign * i64::from(e);
                }
            }
        };
        absorb(&self.num, 1, &mut radicand_negative);
        absorb(&self.den, -1, &mut radicand_negative);
        if radicand_negative {
            return Err(ArithError::NegativeRadicand(format!("{self:?}")));
        }

        let mut outer_negative = self.negative;
        let mut outer: BTreeMap<u64, i64> = BTreeMap::new();
        let mut absorb_outer = |xs: &[i64], sign: i64| {
            for &x in xs.iter().filter(|&&x| x != 0) {
                if x < 0 {
                    outer_negative = !outer_negative;
                }
                for (p, e) in factorize_u64(x.unsigned_abs()) {
                    *outer.entry(p).or_insert(0) += 2 * sign * i64::from(e);
                }
            }
        };
        absorb_outer(&self.outer_num, 1);
        absorb_outer(&self.outer_den, -1);
        for (p, e) in outer {
            *exps.entry(p).or_insert(0) += e;
        }

        let mut coeff_num = BigInt::one();
        let mut coeff_den = BigInt::one();
        let mut radicand = 1u64;
        for (p, e) in exps {
            let half = e.div_euclid(2);
            if e.rem_euclid(2) == 1 {
                radicand = radicand
                    .checked_mul(p)
                    .ok_or_else(|| ArithError::RadicandOverflow(format!("{self:?}")))?;
            }
            let pk = BigInt::from(p).pow(half.unsigned_abs() as u32);
            if half >= 0 {
                coeff_num *= pk;
            } else {
                coeff_den *= pk;
            }
        }
        let mut coeff = ExactRational::new(coeff_num, coeff_den);
        if outer_negative {
            coeff = -coeff;
        }
        debug_assert!(!coeff.is_zero());
        Ok(RootValue::Value(RadicalScalar::term(coeff, radicand)))
    }

    /// Like [`evaluate`](Self::evaluate), mapping a vanishing numerator to the
    /// zero scalar.
    pub fn value(&self) -> Result<RadicalScalar, ArithError> {
        Ok(match self.evaluate()? {
            RootValue::Zero => RadicalScalar::zero(),
            RootValue::Value(v) => v,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sqrt_rational;
    use num_rational::BigRational;

    #[test]
    fn matches_sqrt_rational() {
        let mut f = RootFactors::new();
        f.num(6).num(10).den(4).den(-3).negate();
        // -(6·10 / (4·-3))^{1/2} with the minus inside: radicand = -5 → error
        assert!(matches!(f.evaluate(), Err(ArithError::NegativeRadicand(_))));

        let mut g = RootFactors::new();
        g.num(-1).num(6).num(10).den(4).den(-3);
        let expect = sqrt_rational(&BigRational::new(5.into(), 1.into())).unwrap();
        assert_eq!(g.value().unwrap(), expect);
    }

    #[test]
    fn zero_cancellation() {
        let mut f = RootFactors::new();
        f.num(0).num(3).den(0).den(12);
        assert_eq!(
            f.value().unwrap(),
            RadicalScalar::from_rational(BigRational::new(1.into(), 2.into()))
        );

        let mut g = RootFactors::new();
        g.num(0).num(0).den(0).den(5);
        assert_eq!(g.evaluate().unwrap(), RootValue::Zero);

        let mut h = RootFactors::new();
        h.num(2).den(0);
        assert!(matches!(h.evaluate(), Err(ArithError::ZeroDenominator(_))));
    }

    #[test]
    fn outer_rational_factor() {
        let mut f = RootFactors::new();
        f.num(2).outer_den(-4).outer_num(2);
        // (2/-4)·√2 = -√2/2
        assert_eq!(
            f.value().unwrap(),
            RadicalScalar::term(BigRational::new((-1).into(), 2.into()), 2)
        );
    }
}
