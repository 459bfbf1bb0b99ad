use glmn::arith::*;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(a: i64, b: i64) -> ExactRational {
    ExactRational::new(BigInt::from(a), BigInt::from(b))
}

fn rt(a: i64, b: i64) -> RadicalScalar {
    sqrt_rational(&q(a, b)).unwrap()
}

#[test]
fn square_root_examples() {
    assert_eq!(rt(4, 9), RadicalScalar::from_rational(q(2, 3)));
    assert_eq!(rt(1, 2), RadicalScalar::term(q(1, 2), 2));
    assert_eq!(rt(1, 2).terms(), &[(2, q(1, 2))]);
    assert!(rt(0, 1).is_zero());
    assert!(sqrt_rational(&q(-1, 3)).is_err());
}

#[test]
fn ring_examples() {
    let s2 = RadicalScalar::term(q(1, 1), 2);
    let s3 = RadicalScalar::term(q(1, 1), 3);
    assert_eq!(&s2 * &s2, RadicalScalar::from_integer(2));
    assert_eq!(&(&s2 + &s3) - &s3, s2);
    assert_eq!(RadicalScalar::term(q(1, 2), 8), s2);
    assert!((&s2 - &s2).is_zero());
    assert_eq!(-(-s3.clone()), s3);
    assert_eq!((&s2 + &s3).to_f64(), 2f64.sqrt() + 3f64.sqrt());
}

#[test]
fn rational_parsing_and_json() {
    assert_eq!(parse_rational("3/-6"), Some(q(-1, 2)));
    assert_eq!(parse_rational(" 7 "), Some(q(7, 1)));
    assert_eq!(parse_rational("1/0"), None);
    let v = &RadicalScalar::term(q(-3, 4), 12) + &RadicalScalar::from_integer(5);
    let json = serde_json::to_value(&v).unwrap();
    assert_eq!(
        json,
        serde_json::json!([{"radicand": 1, "num": "5", "den": "1"}, {"radicand": 3, "num": "-3", "den": "2"}])
    );
    let back: RadicalScalar = serde_json::from_value(json).unwrap();
    assert_eq!(back, v);
    assert!(serde_json::from_str::<RadicalScalar>(r#"[{"radicand":0,"num":"1","den":"1"}]"#).is_err());
}

#[test]
fn factorization_reconstructs_input() {
    for n in [1u64, 2, 12, 97, 360, 1 << 40, 600851475143, 18446744073709551557] {
        let f = factorize_u64(n);
        let back: u64 = f.iter().map(|(p, e)| p.pow(*e)).product();
        assert_eq!(back, n);
        let big = BigUint::from(n) * BigUint::from(n) * BigUint::from(6u32);
        let (square_root, free) = squarefree_split(&big);
        assert_eq!(&square_root * &square_root * &free, big);
        assert_eq!(free, BigUint::from(6u32));
        let fb = factorize(&big);
        let prod = fb.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(prod, big);
    }
}

#[test]
fn root_factors_cancel_matched_zeros() {
    let mut f = RootFactors::new();
    f.num(0).den(0).num(3).den(12);
    assert_eq!(f.value().unwrap(), RadicalScalar::from_rational(q(1, 2)));
    let mut g = RootFactors::new();
    g.num(0).num(2);
    assert!(g.value().unwrap().is_zero());
    let mut h = RootFactors::new();
    h.den(0);
    assert!(h.value().is_err());
    let mut neg = RootFactors::new();
    neg.num(-2).den(1);
    assert!(neg.value().is_err());
    let mut outer = RootFactors::new();
    outer.sign_power(3).outer_num(2).outer_den(4).num(8);
    assert_eq!(outer.value().unwrap(), RadicalScalar::term(q(-1, 1), 2));
}

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-30i64..30, 1i64..20).prop_map(|(a, b)| q(a, b))
}

fn radical() -> impl Strategy<Value = RadicalScalar> {
    prop::collection::vec((1u64..40, small_rational()), 0..4).prop_map(RadicalScalar::from_terms)
}

proptest! {
    #[test]
    fn roots_multiply(a in 0i64..200, b in 1i64..50, c in 0i64..200, d in 1i64..50) {
        let (p, r) = (q(a, b), q(c, d));
        prop_assert_eq!(&sqrt_rational(&p).unwrap() * &sqrt_rational(&r).unwrap(), sqrt_rational(&(p * r)).unwrap());
    }

    #[test]
    fn root_squares_back(a in 0i64..500, b in 1i64..60) {
        let s = sqrt_rational(&q(a, b)).unwrap();
        prop_assert_eq!(&s * &s, RadicalScalar::from_rational(q(a, b)));
        prop_assert_eq!(s.signed_square(), Some(q(a, b)));
    }

    #[test]
    fn ring_axioms(a in radical(), b in radical(), c in radical()) {
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &RadicalScalar::one(), a.clone());
        prop_assert!((&a * &RadicalScalar::zero()).is_zero());
    }

    #[test]
    fn canonical_form_is_idempotent(a in radical()) {
        let again = RadicalScalar::from_terms(a.terms().to_vec());
        prop_assert_eq!(&again, &a);
        for (d, c) in a.terms() {
            prop_assert!(!c.is_zero());
            let f = factorize_u64(*d);
            prop_assert!(f.values().all(|&e| e == 1));
        }
        prop_assert!(a.terms().windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn division_inverts_multiplication(a in radical(), b in radical()) {
        if let Some(inv) = b.checked_inv() {
            prop_assert_eq!(&b * &inv, RadicalScalar::one());
            prop_assert_eq!(a.checked_div(&b).map(|x| &x * &b), Some(a.clone()));
        } else {
            prop_assert!(b.is_zero());
        }
    }
}
