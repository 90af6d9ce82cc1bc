mod common;

use proptest::prelude::*;

use colalg::analysis::{centroid_space, search_operators, structure_subspaces, SearchConfig};
use colalg::axioms::{check_identity_with, spot_check};
use colalg::constructions::{
    derive_ternary_from_binary, direct_sum, from_associative, jts_to_lts, AssocTarget, SumKind,
};
use colalg::corpus::{generate_corpus, worked_example, CorpusEntry};
use colalg::graded::{op_apply, GradedElement, OpValue};
use colalg::linalg::Subspace;
use colalg::report::Value;
use colalg::{
    check_identity, check_operator, CheckOptions, Error, Field, GradedAlgebraObject, Identity, LinearMap, Predicate,
    Scalar, Variant, Vector,
};

fn corpus() -> Vec<CorpusEntry> {
    generate_corpus(0)
}

fn apply2(obj: &GradedAlgebraObject, x: &GradedElement, y: &GradedElement) -> GradedElement {
    match op_apply(&obj.basis, obj.op("bracket2").unwrap(), &[x.clone(), y.clone()]).unwrap() {
        OpValue::Element(e) => e,
        OpValue::Scalar(_) => panic!("bracket2 is algebra-valued"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Every reported witness re-evaluates, through element-level evaluation, to lhs != rhs.
    #[test]
    fn leibniz_witnesses_are_sound(seed in any::<u64>(), n in 1usize..5) {
        let obj = common::random_object(seed, n, &[("bracket2", 2)]);
        let opts = CheckOptions { cap: None, ..CheckOptions::default() };
        let r = check_identity_with(&obj, Identity::Leibniz2, &opts).unwrap();
        prop_assert_eq!(r.violations as usize, r.witnesses.len());
        for w in &r.witnesses {
            let [x, y, z] = [0, 1, 2].map(|k| GradedElement::basis(&obj.basis, w.tuple[k]));
            let lhs = apply2(&obj, &apply2(&obj, &x, &y), &z).coeffs;
            let mut rhs = apply2(&obj, &x, &apply2(&obj, &y, &z)).coeffs;
            rhs.axpy(&obj.eps(w.tuple[1], w.tuple[2]), &apply2(&obj, &apply2(&obj, &x, &z), &y).coeffs);
            prop_assert_ne!(&lhs, &rhs);
            prop_assert_eq!(&w.lhs, &Value::Vector(lhs));
            prop_assert_eq!(&w.rhs, &Value::Vector(rhs));
        }
    }

    #[test]
    fn reports_do_not_depend_on_scheduling(seed in any::<u64>(), n in 2usize..5) {
        let obj = common::random_object(seed, n, &[("bracket3", 3)]);
        let par = CheckOptions { cap: None, ..CheckOptions::default() };
        let seq = CheckOptions { parallel: false, ..par.clone() };
        let a = check_identity_with(&obj, Identity::TernaryLeibniz, &par).unwrap();
        let b = check_identity_with(&obj, Identity::TernaryLeibniz, &seq).unwrap();
        prop_assert_eq!(&a, &b);
        let mut tuples: Vec<_> = a.witnesses.iter().map(|w| (w.equation.clone(), w.tuple.clone())).collect();
        let sorted = { let mut t = tuples.clone(); t.sort(); t };
        tuples.dedup();
        prop_assert_eq!(tuples, sorted);
    }
}

#[test]
fn passing_claims_survive_homogeneous_spot_checks() {
    for e in corpus() {
        for &claim in &e.object.claims {
            let v = e.object.variant.unwrap_or_default();
            let r = spot_check(&e.object, claim, v, 100, 11).unwrap();
            assert!(r.passed(), "{} {claim}: {r}", e.id);
        }
    }
}

#[test]
fn witness_cap_bounds_the_report_but_not_the_count() {
    let obj = common::random_object(3, 4, &[("bracket3", 3)]);
    let all = check_identity_with(
        &obj,
        Identity::TernaryLeibniz,
        &CheckOptions {
            cap: None,
            ..Default::default()
        },
    )
    .unwrap();
    let capped = check_identity(&obj, Identity::TernaryLeibniz).unwrap();
    assert!(all.violations > 16, "need a badly broken instance");
    assert_eq!(capped.witnesses.len(), 16);
    assert_eq!(capped.violations, all.violations);
    assert_eq!(capped.checked_count, all.checked_count);
    assert_eq!(capped.checked_count, 4u64.pow(5));
    assert_eq!(capped.witnesses[..], all.witnesses[..16]);
}

#[test]
fn lie_color_instances_have_zero_leibniz_kernel_and_conversely() {
    for e in corpus() {
        let Ok(leib) = check_identity(&e.object, Identity::Leibniz2) else {
            continue;
        };
        let lie = check_identity(&e.object, Identity::LieColor).unwrap();
        if lie.passed() {
            assert!(leib.passed(), "{}", e.id);
        }
        if !leib.passed() {
            continue;
        }
        let s = structure_subspaces(&e.object).unwrap();
        assert_eq!(lie.passed(), s.leibniz_kernel.is_zero(), "{}", e.id);
    }
}

#[test]
fn example_has_expected_subspaces() {
    let s = structure_subspaces(&worked_example()).unwrap();
    assert_eq!(s.leibniz_kernel, Subspace::span(3, [Vector::unit(0)]));
    assert_eq!(s.right_center, Subspace::span(3, [Vector::unit(0), Vector::unit(2)]));
    assert_eq!(s.left_center, s.right_center);
}

#[test]
fn jts_to_lts_passes_on_every_corpus_jts() {
    let mut count = 0;
    for e in corpus().iter().filter(|e| e.object.claims.contains(&Identity::Assoc)) {
        let j = from_associative(&e.object, &AssocTarget::JtsPlain).unwrap();
        assert!(check_identity(&j, Identity::Jts).unwrap().passed(), "{}", e.id);
        let l = jts_to_lts(&j).unwrap();
        let r = check_identity(&l, Identity::Lts).unwrap();
        assert!(r.passed(), "{}: {r}", e.id);
        count += 1;
    }
    assert!(count >= 5);
}

#[test]
fn derived_commutator_is_the_ternary_commutator() {
    for e in corpus().iter().filter(|e| e.object.claims.contains(&Identity::Assoc)) {
        let lie = from_associative(&e.object, &AssocTarget::CommutatorLie).unwrap();
        let derived = derive_ternary_from_binary(&lie).unwrap();
        let direct = from_associative(&e.object, &AssocTarget::TernaryCommutator).unwrap();
        assert_eq!(
            derived.op("bracket3").unwrap(),
            direct.op("bracket3").unwrap(),
            "{}",
            e.id
        );
    }
}

#[test]
fn direct_sum_commutes_up_to_permutation() {
    let c = corpus();
    let a = &c.iter().find(|e| e.id == "a/worked_example").unwrap().object;
    let b = &c.iter().find(|e| e.id == "b/abelian_2").unwrap().object;
    let ab = direct_sum(a, b, SumKind::Binary).unwrap();
    let ba = direct_sum(b, a, SumKind::Binary).unwrap();
    let (na, nb) = (a.dim(), b.dim());
    let perm = |i: usize| if i < na { i + nb } else { i - na };
    let moved = ab.op("bracket2").unwrap().reindex(perm, perm);
    assert_eq!(&moved, ba.op("bracket2").unwrap());
    for i in 0..na + nb {
        assert_eq!(ab.degree(i), ba.degree(perm(i)));
    }
}

#[test]
fn constructions_reject_failed_hypotheses_with_witnesses() {
    let mut broken = worked_example();
    let mut b = broken.op("bracket2").unwrap().clone();
    b.add_constant(&[1, 1], 1, &Scalar::one());
    broken.set_op("bracket2", b);
    match derive_ternary_from_binary(&broken) {
        Err(e @ Error::Precondition { .. }) => {
            let r = e.report().unwrap();
            assert!(!r.witnesses.is_empty());
            assert_eq!(r.witnesses[0].tuple, vec![1, 1, 1]);
        }
        other => panic!("expected a precondition failure, got {other:?}"),
    }
}

fn flatten(m: &LinearMap) -> Vector {
    let n = m.cols();
    Vector::from_pairs(m.entries().into_iter().map(|(r, c, x)| (r * n + c, x)))
}

#[test]
fn centroid_maps_and_searched_maps_agree() {
    let gf3 = Field::Prime(3);
    for e in corpus() {
        if !(e.object.has_op("bracket2") || e.object.has_op("product2")) {
            continue;
        }
        let obj = e.object.to_field(gf3).unwrap();
        if obj.basis.even_positions().len() > 8 {
            continue;
        }
        let n = obj.dim();
        let basis = centroid_space(&obj, 2).unwrap();
        for m in &basis {
            assert!(
                check_operator(&obj, m, Predicate::Centroid2, None).unwrap().passed(),
                "{}",
                e.id
            );
        }
        let span = Subspace::span(n * n, basis.iter().map(flatten));
        let found = search_operators(&obj, &SearchConfig::new(3, Predicate::Centroid2)).unwrap();
        for m in &found.maps {
            assert!(
                span.contains(&flatten(m)),
                "{}: searched map outside the centroid span",
                e.id
            );
        }
        let q = centroid_space(&e.object, 2).unwrap();
        for m in &q {
            assert!(
                check_operator(&e.object, m, Predicate::Centroid2, None)
                    .unwrap()
                    .passed(),
                "{}",
                e.id
            );
        }
    }
}

#[test]
fn comstrans_variants_differ_on_a_noncommutative_instance() {
    let c = corpus();
    let m = &c.iter().find(|e| e.id == "c/upper_triangular").unwrap().object;
    let printed = from_associative(m, &AssocTarget::Comstrans(Variant::Printed)).unwrap();
    let amended = from_associative(m, &AssocTarget::Comstrans(Variant::Amended)).unwrap();
    let own = |o: &GradedAlgebraObject| CheckOptions::variant(o.variant.unwrap_or_default());
    let rp = check_identity_with(&printed, Identity::Comstrans, &own(&printed)).unwrap();
    let ra = check_identity_with(&amended, Identity::Comstrans, &own(&amended)).unwrap();
    assert!(!rp.passed() && !rp.witnesses.is_empty());
    assert!(ra.passed(), "{ra}");
}
