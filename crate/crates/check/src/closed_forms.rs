//! The two worked `gl(2|3)` coefficients written out as closed forms, and
//! the grid of integer substitutions at which the recursion is compared
//! against them.

use glmn::arith::{sqrt_rational, ExactRational, RadicalScalar};
use glmn::cgc::{cgc, cgc_graded, NaturalVector};
use glmn::patterns::{AlgebraShape, GZPattern, Grading};

fn gl23() -> AlgebraShape {
    AlgebraShape::new(2, 3).unwrap()
}

/// Free entries of the bra pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sub {
    pub m15: i64,
    pub m25: i64,
    pub m35: i64,
    pub m45: i64,
    pub m55: i64,
    pub m34: i64,
    pub m44: i64,
    pub m33: i64,
    pub m11: i64,
}

/// Candidate substitutions; inadmissible ones are filtered later by pattern
/// validation.
pub fn substitutions() -> Vec<Sub> {
    let mut out = Vec::new();
    for m15 in 3..=7 {
        for m25 in 1..=m15 {
            for m35 in 0..=3 {
                for m45 in 0..=m35 {
                    for m55 in 0..=m45 {
                        for m34 in 0..=m35 {
                            for m44 in 0..=m34 {
                                for m33 in 0..=m34 {
                                    for m11 in [m15 - 3, m25 - 1, m25] {
                                        out.push(Sub {
                                            m15,
                                            m25,
                                            m35,
                                            m45,
                                            m55,
                                            m34,
                                            m44,
                                            m33,
                                            m11,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn pattern(rows: [Vec<i64>; 5]) -> Option<GZPattern> {
    GZPattern::new(gl23(), &rows).ok()
}

fn bra(s: Sub) -> Option<GZPattern> {
    pattern([
        vec![s.m15, s.m25, s.m35, s.m45, s.m55],
        vec![s.m15 - 1, s.m25 - 1, s.m34, s.m44],
        vec![s.m15 - 2, s.m25 - 1, s.m33],
        vec![s.m15 - 3, s.m25 - 1],
        vec![s.m11],
    ])
}

fn closed_form(num: &[i64], den: &[i64]) -> Option<RadicalScalar> {
    if den.contains(&0) {
        return None;
    }
    let prod = |xs: &[i64]| {
        xs.iter().fold(ExactRational::from_integer(1.into()), |acc, &x| {
            acc * ExactRational::from_integer(x.into())
        })
    };
    sqrt_rational(&(prod(num) / prod(den))).ok()
}

fn xi(grading: Grading) -> ExactRational {
    match grading {
        Grading::Natural => ExactRational::from_integer(1.into()),
        Grading::Opposite => ExactRational::from_integer((-1).into()),
    }
}

/// Odd vector `j = 2`: one level-5 and one level-4 factor. Returns
/// `(recursion, closed form)` when the substitution is admissible.
pub fn odd_chain(s: Sub, grading: Grading) -> Option<(RadicalScalar, RadicalScalar)> {
    let b = bra(s)?;
    let k = pattern([
        vec![s.m15, s.m25 + 1, s.m35, s.m45, s.m55],
        vec![s.m15 - 1, s.m25, s.m34, s.m44],
        vec![s.m15 - 2, s.m25 - 1, s.m33],
        vec![s.m15 - 3, s.m25 - 1],
        vec![s.m11],
    ])?;
    let (a, c) = (s.m25, [s.m35, s.m45, s.m55, s.m34, s.m44, s.m33]);
    let expected = closed_form(
        &[a + c[0], a + c[1] - 1, a + c[2] - 2, a + c[5] - 1],
        &[a + c[0] + 1, a + c[1], a + c[2] - 1, a + c[3] - 1, a + c[4] - 2],
    )?
    .scale(&-xi(grading));
    let got = cgc_graded(&b, NaturalVector::new(gl23(), 2).unwrap(), &k, grading).unwrap();
    Some((got, expected))
}

/// Even vector `j = 4`: three raising factors and a `gl(2)` coefficient.
pub fn even_chain(s: Sub) -> Option<(RadicalScalar, RadicalScalar)> {
    let b = bra(s)?;
    let k = pattern([
        vec![s.m15, s.m25 + 1, s.m35, s.m45, s.m55],
        vec![s.m15 - 1, s.m25, s.m34, s.m44],
        vec![s.m15 - 2, s.m25, s.m33],
        vec![s.m15 - 3, s.m25],
        vec![s.m11],
    ])?;
    let a = s.m25;
    let expected = closed_form(
        &[
            a + s.m35,
            a + s.m45 - 1,
            a + s.m55 - 2,
            a + s.m34,
            a + s.m44 - 1,
            s.m11 - a + 1,
        ],
        &[
            a + s.m35 + 1,
            a + s.m45,
            a + s.m55 - 1,
            a + s.m34 - 1,
            a + s.m44 - 2,
            s.m15 - a - 1,
        ],
    )?;
    let got = cgc(&b, NaturalVector::new(gl23(), 4).unwrap(), &k).unwrap();
    Some((got, expected))
}
