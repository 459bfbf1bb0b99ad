use glmn::arith::RadicalScalar;
use glmn::cgc::*;
use glmn::characters::dimension;
use glmn::patterns::*;
use glmn::Exec;
use glmn_check::closed_forms::{even_chain, odd_chain, substitutions};
use proptest::prelude::*;

fn shape(m: usize, n: usize) -> AlgebraShape {
    AlgebraShape::new(m, n).unwrap()
}

fn hw(m: usize, n: usize, lambda: &[usize]) -> HighestWeight {
    weight_from_partition(&Partition::new(lambda.to_vec()).unwrap(), shape(m, n)).unwrap()
}

fn hook_weights(m: usize, n: usize, max_size: usize) -> Vec<HighestWeight> {
    (0..=max_size)
        .flat_map(Partition::all_of_size)
        .filter(|p| p.in_hook(m, n))
        .map(|p| weight_from_partition(&p, shape(m, n)).unwrap())
        .collect()
}

fn assert_matches_oracle(mu: &HighestWeight, grading: Grading) {
    let table = cgc_table_with(mu, grading, Exec::Sequential).unwrap();
    let oracle = glmn_check::oracle::build(mu, grading);
    if let Err(e) = glmn_check::oracle::compare(&oracle, &table) {
        panic!("{mu:?} {grading:?}: {e}");
    }
}

#[test]
fn worked_example_odd_vector_matches_closed_form() {
    for grading in [Grading::Natural, Grading::Opposite] {
        let mut checked = 0;
        for s in substitutions() {
            if let Some((got, expected)) = odd_chain(s, grading) {
                assert_eq!(got, expected, "{s:?} {grading:?}");
                checked += 1;
            }
        }
        assert!(checked >= 20, "only {checked} admissible substitutions");
    }
}

#[test]
fn worked_example_even_vector_matches_closed_form() {
    let mut checked = 0;
    for s in substitutions() {
        if let Some((got, expected)) = even_chain(s) {
            assert_eq!(got, expected, "{s:?}");
            checked += 1;
        }
    }
    assert!(checked >= 20, "only {checked} admissible substitutions");
}

#[test]
fn tables_match_highest_weight_oracle() {
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for mu in hook_weights(m, n, 3) {
            for grading in [Grading::Natural, Grading::Opposite] {
                assert_matches_oracle(&mu, grading);
            }
        }
    }
}

#[test]
fn classical_tables_match_oracle() {
    for m in [2, 3] {
        for mu in hook_weights(m, 0, 3) {
            assert_matches_oracle(&mu, Grading::Natural);
        }
    }
    assert_matches_oracle(&hw(4, 0, &[2, 1, 1]), Grading::Natural);
}

#[test]
fn highest_weights_couple_with_unit_coefficient() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3), (3, 0)] {
        for mu in hook_weights(m, n, 3) {
            let (_, top) = decompose_tensor(&mu).into_iter().find(|(k, _)| *k == 1).unwrap();
            let r = m + n;
            let value = cgc(
                &highest_weight_pattern(&mu),
                NaturalVector::new(shape(m, n), r).unwrap(),
                &highest_weight_pattern(&top),
            )
            .unwrap();
            assert_eq!(value, RadicalScalar::one(), "{mu:?}");
        }
    }
}

#[test]
fn coefficients_vanish_off_the_coupling_paths() {
    for mu in [
        hw(1, 1, &[2, 1]),
        hw(2, 1, &[2, 1]),
        hw(1, 2, &[2, 1]),
        hw(2, 2, &[1, 1]),
        hw(3, 0, &[2, 1]),
    ] {
        let sh = mu.shape();
        let bras = enumerate_patterns(&mu);
        for (_, top) in decompose_tensor(&mu) {
            for ket in enumerate_patterns(&top) {
                for bra in &bras {
                    for j in NaturalVector::all(sh) {
                        let allowed = selection_rules(bra, j, &ket);
                        let path = coupling_path(bra, j, &ket);
                        let value = cgc(bra, j, &ket).unwrap();
                        if !allowed {
                            assert!(value.is_zero() && path.is_none(), "{bra} {j:?} {ket}");
                        }
                        assert_eq!(path.is_some(), !value.is_zero(), "{bra} {j:?} {ket}");
                    }
                }
            }
        }
    }
}

#[test]
fn tensor_decomposition_balances_dimensions() {
    let d = |mu: &HighestWeight| dimension(&partition_from_weight(mu), mu.shape()).unwrap();
    let ks = |mu: &HighestWeight| {
        decompose_tensor(mu)
            .into_iter()
            .map(|(k, w)| (k, w.components().to_vec()))
            .collect::<Vec<_>>()
    };
    assert_eq!(
        ks(&HighestWeight::new(shape(1, 1), vec![1, 0]).unwrap()),
        vec![(1, vec![2, 0]), (2, vec![1, 1])]
    );
    assert_eq!(
        ks(&HighestWeight::new(shape(2, 3), vec![0; 5]).unwrap()),
        vec![(1, vec![1, 0, 0, 0, 0])]
    );
    for sh in AlgebraShape::all_up_to(5) {
        for mu in hook_weights(sh.m(), sh.n(), 4) {
            let total: num_bigint::BigInt = decompose_tensor(&mu).iter().map(|(_, w)| d(w)).sum();
            assert_eq!(total, d(&mu) * sh.r(), "{mu:?}");
        }
    }
}

#[test]
fn small_tables() {
    let mu = HighestWeight::new(shape(1, 1), vec![1, 0]).unwrap();
    let top = HighestWeight::new(shape(1, 1), vec![2, 0]).unwrap();
    let bra = natural_pattern(shape(1, 1), 2);
    assert_eq!(
        cgc(
            &bra,
            NaturalVector::new(shape(1, 1), 2).unwrap(),
            &highest_weight_pattern(&top)
        )
        .unwrap(),
        RadicalScalar::one()
    );
    let table = cgc_table(&mu).unwrap();
    assert_eq!(table.product_dim(), 4);
    let t = table.stacked();
    assert_eq!((t.nrows(), t.ncols()), (4, 4));
    assert_eq!(
        t.transpose().mul(&t, Exec::Sequential),
        glmn::sparse::SparseMatrix::identity(4)
    );

    // trivial ⊗ natural is the natural module itself
    let zero = HighestWeight::new(shape(2, 1), vec![0; 3]).unwrap();
    let table = cgc_table(&zero).unwrap();
    assert_eq!(table.blocks.len(), 1);
    let block = &table.blocks[0];
    for j in 1..=3 {
        let ket = block.kets.index_of(&natural_pattern(shape(2, 1), j)).unwrap();
        for row in 0..3 {
            let expected = if row == j - 1 {
                RadicalScalar::one()
            } else {
                RadicalScalar::zero()
            };
            assert_eq!(block.matrix.get(row, ket), expected);
        }
    }
}

#[test]
fn equivariance_examples() {
    let report = verify_equivariance(&HighestWeight::new(shape(1, 1), vec![1, 0]).unwrap()).unwrap();
    assert_eq!(report.generators.len(), 4);
    assert!(report.all_passed(), "{report:?}");
    let report = verify_equivariance(&hw(2, 2, &[1, 1])).unwrap();
    assert!(report.all_passed(), "{report:?}");
    assert!(report.dimension_balance && report.orthogonal);
}

#[test]
fn dropping_the_sign_rule_breaks_the_odd_generators() {
    for (m, n, lam) in [(1, 1, vec![1]), (2, 1, vec![2, 1]), (2, 2, vec![1, 1])] {
        let mu = hw(m, n, &lam);
        let table = cgc_table(&mu).unwrap();
        let graded = verify_table(&table, CoproductRule::Graded, Exec::Sequential).unwrap();
        assert!(graded.all_passed());
        let plain = verify_table(&table, CoproductRule::Ungraded, Exec::Sequential).unwrap();
        let failed: Vec<_> = plain
            .generators
            .iter()
            .filter(|g| !g.passed)
            .map(|g| g.generator.as_str())
            .collect();
        assert!(failed.contains(&format!("e{m}").as_str()), "{failed:?}");
        assert!(failed.iter().all(|g| g.ends_with(&m.to_string())), "{failed:?}");
    }
}

#[test]
fn opposite_grading_flips_odd_sign_only() {
    let mu = hw(2, 2, &[2, 1]);
    let natural = cgc_table_with(&mu, Grading::Natural, Exec::Sequential).unwrap();
    let opposite = cgc_table_with(&mu, Grading::Opposite, Exec::Sequential).unwrap();
    let report = verify_table(&opposite, CoproductRule::Graded, Exec::Sequential).unwrap();
    assert!(report.all_passed(), "{report:?}");
    assert!(report.block_gradings.iter().all(|b| b.grading.is_some()));
    for (a, b) in natural.blocks.iter().zip(&opposite.blocks) {
        for t in a.matrix.triplets() {
            let (_, j) = natural.product_pair(t.row);
            let expected = if j <= mu.shape().n() {
                -t.value.clone()
            } else {
                t.value.clone()
            };
            assert_eq!(b.matrix.get(t.row, t.col), expected);
        }
        assert_eq!(a.matrix.nnz(), b.matrix.nnz());
    }
}

#[test]
fn unitarity_and_equivariance_sweep_small() {
    for sh in AlgebraShape::all_up_to(3) {
        for mu in hook_weights(sh.m(), sh.n(), 3) {
            for grading in [Grading::Natural, Grading::Opposite] {
                let report = verify_equivariance_with(&mu, grading, Exec::default()).unwrap();
                assert!(report.all_passed(), "{report:?}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn selection_rule_failures_give_zero(case in 0usize..4, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), jj in 1usize..=4, k in any::<prop::sample::Index>()) {
        let mu = [hw(2, 1, &[2, 1]), hw(1, 2, &[2, 1]), hw(2, 2, &[2]), hw(1, 3, &[1, 1])][case].clone();
        let sh = mu.shape();
        let bras = enumerate_patterns(&mu);
        let tops = decompose_tensor(&mu);
        let top = &tops[k.index(tops.len())].1;
        let kets = enumerate_patterns(top);
        let bra = &bras[a.index(bras.len())];
        let ket = &kets[b.index(kets.len())];
        let j = NaturalVector::new(sh, 1 + (jj - 1) % sh.r()).unwrap();
        if !selection_rules(bra, j, ket) {
            prop_assert!(cgc(bra, j, ket).unwrap().is_zero());
        }
    }
}
