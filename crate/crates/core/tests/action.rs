use glmn::action::{
    act_e, act_f, act_h, generator_matrix, lowering_span_dimension, matrix_unit, verify_defining_relations,
    verify_representation, Generator, Representation,
};
use glmn::arith::RadicalScalar;
use glmn::patterns::{
    enumerate_patterns, highest_weight_pattern, weight_from_partition, AlgebraShape, GZPattern, Grading, HighestWeight,
    Partition,
};
use glmn::Exec;

fn shape(m: usize, n: usize) -> AlgebraShape {
    AlgebraShape::new(m, n).unwrap()
}

fn hw(m: usize, n: usize, lambda: &[usize]) -> HighestWeight {
    weight_from_partition(&Partition::new(lambda.to_vec()).unwrap(), shape(m, n)).unwrap()
}

fn one() -> RadicalScalar {
    RadicalScalar::one()
}

#[test]
fn gl11_natural_module() {
    let s = shape(1, 1);
    let low = GZPattern::new(s, &[vec![1, 0], vec![0]]).unwrap();
    let high = GZPattern::new(s, &[vec![1, 0], vec![1]]).unwrap();
    let e = act_e(1, &low).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e[0].pattern, high);
    assert_eq!(e[0].coefficient, one());
    let f = act_f(1, &high).unwrap();
    assert_eq!((f[0].pattern.clone(), f[0].coefficient.clone()), (low.clone(), one()));
    assert!(act_e(1, &high).unwrap().is_empty());
    assert_eq!(act_h(1, &high).unwrap(), one());
    assert!(act_h(3, &high).is_err());
    let report = verify_defining_relations(&high.highest_weight().unwrap()).unwrap();
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn highest_pattern_is_annihilated_by_raising() {
    for (m, n, lam) in [(2, 2, vec![2, 1]), (1, 3, vec![3, 1]), (3, 1, vec![2, 2, 1])] {
        let mu = hw(m, n, &lam);
        let top = highest_weight_pattern(&mu);
        for k in 1..m + n {
            assert!(act_e(k, &top).unwrap().is_empty());
        }
        let pats = enumerate_patterns(&mu);
        let bottom = pats.last().unwrap();
        for k in 1..m + n {
            assert!(act_f(k, bottom).unwrap().is_empty(), "f{k} on {bottom}");
        }
        for k in 1..=m + n {
            assert_eq!(act_h(k, &top).unwrap(), RadicalScalar::from_integer(mu.get(k)));
        }
    }
}

#[test]
fn relations_on_small_modules() {
    let cases: Vec<(usize, usize, Vec<usize>)> = vec![
        (2, 2, vec![2, 1]),
        (1, 2, vec![2, 1]),
        (2, 1, vec![2, 1, 1]),
        (3, 1, vec![2, 1]),
        (1, 3, vec![1, 1]),
        (2, 2, vec![3, 2, 1]),
        (3, 0, vec![2, 1]),
        (1, 1, vec![3, 1, 1]),
    ];
    for (m, n, lam) in cases {
        let mu = hw(m, n, &lam);
        let rep = Representation::new(&mu).unwrap();
        let report = verify_representation(&rep, Exec::default());
        let fails: Vec<_> = report.failures().collect();
        assert!(fails.is_empty(), "gl({m}|{n}) {lam:?}: {fails:#?}");

        for k in 1..m + n {
            assert_eq!(rep.f(k).matrix, rep.e(k).matrix.transpose(), "f{k} vs e{k}^T");
        }
        assert_eq!(lowering_span_dimension(&rep), rep.dim());
    }
}

#[test]
fn weights_and_parities_are_compatible() {
    let mu = hw(2, 2, &[2, 1]);
    let rep = Representation::new(&mu).unwrap();
    let b = rep.basis();
    for k in 1..4 {
        for t in rep.e(k).matrix.triplets() {
            let (to, from) = (b.pattern(t.row), b.pattern(t.col));
            let (wt, wf) = (to.weight().0, from.weight().0);
            let diff: Vec<i64> = wt.iter().zip(&wf).map(|(a, b)| a - b).collect();
            let mut expect = vec![0; 4];
            expect[k - 1] = 1;
            expect[k] = -1;
            assert_eq!(diff, expect);
            let flipped = to.parity(Grading::Natural) != from.parity(Grading::Natural);
            assert_eq!(flipped, k == 2);
        }
    }
}

#[test]
fn fault_injection_is_detected() {
    let mu = hw(2, 2, &[2, 1]);
    let mut rep = Representation::new(&mu).unwrap();
    let mut e1 = rep.e(1).clone();
    let t = e1.matrix.triplets()[0].clone();
    e1.matrix.set(t.row, t.col, &t.value + &one());
    rep.replace(e1).unwrap();
    let report = verify_representation(&rep, Exec::Sequential);
    assert!(!report.all_passed());
    assert!(report.failures().all(|f| f.witness.is_some()));
}

#[test]
fn odd_generator_squares_to_zero_and_traces() {
    let mu = hw(2, 2, &[2, 1]);
    let em = generator_matrix(Generator::E(2), &mu).unwrap();
    assert!(em.is_odd());
    assert!(em.matrix.mul(&em.matrix, Exec::Sequential).is_zero());
    let rep = Representation::new(&mu).unwrap();
    let e = rep.e(2).matrix.clone();
    let f = rep.f(2).matrix.clone();
    let anti = e.mul(&f, Exec::Sequential).add(&f.mul(&e, Exec::Sequential));
    assert_eq!(anti.trace(), rep.h(2).matrix.add(&rep.h(3).matrix).trace());
    let e1 = &rep.e(1).matrix;
    let f1 = &rep.f(1).matrix;
    assert!(e1
        .mul(f1, Exec::Sequential)
        .sub(&f1.mul(e1, Exec::Sequential))
        .trace()
        .is_zero());
    for k in 1..=4 {
        let h = &rep.h(k).matrix;
        assert!(h
            .triplets()
            .iter()
            .all(|t| t.row == t.col && t.value.as_integer().is_some()));
    }
}

#[test]
fn matrix_units_satisfy_gl_brackets() {
    // [e_{13}, e_{31}} = e_11 ± e_33 with the sign set by the grading
    let mu = hw(2, 1, &[2, 1]);
    let rep = Representation::new(&mu).unwrap();
    let e13 = matrix_unit(&rep, 1, 3, Exec::Sequential).unwrap();
    let e31 = matrix_unit(&rep, 3, 1, Exec::Sequential).unwrap();
    assert!(e13.is_odd() && e31.is_odd());
    let anti = glmn::action::supercommutator(&e13, &e31, Exec::Sequential);
    assert_eq!(anti.matrix, rep.h(1).matrix.add(&rep.h(3).matrix));
    assert_eq!(e31.matrix, e13.matrix.transpose());
}
