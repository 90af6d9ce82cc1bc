mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use colalg::graded::{op_apply, GradedElement, OpValue};
use colalg::linalg::Subspace;
use colalg::{Bicharacter, Builtin, Field, GradingGroup, GroupElement, LinearMap, Scalar, Vector};

fn builtins() -> Vec<(Builtin, GradingGroup)> {
    vec![
        (Builtin::Z2, GradingGroup::z2()),
        (Builtin::Z2n, GradingGroup::z2n(3)),
        (Builtin::Z2xZ2, GradingGroup::z2n(2)),
        (Builtin::ZxZ, GradingGroup::zxz()),
    ]
}

fn elem(g: &GradingGroup, coords: &[i64]) -> GroupElement {
    g.element(&coords[..g.rank()]).unwrap()
}

fn sign(e: i64) -> Scalar {
    Scalar::from_i64(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

proptest! {
    #[test]
    fn builtin_bicharacters_are_skew_and_bimultiplicative(
        k in 0usize..4,
        a in prop::array::uniform3(-5i64..5),
        b in prop::array::uniform3(-5i64..5),
        c in prop::array::uniform3(-5i64..5),
    ) {
        let (kind, g) = builtins().swap_remove(k);
        let eps = Bicharacter::builtin(kind, &g).unwrap();
        let (a, b, c) = (elem(&g, &a), elem(&g, &b), elem(&g, &c));
        prop_assert_eq!(&eps.eval(&a, &b) * &eps.eval(&b, &a), Scalar::one());
        let aa = eps.eval(&a, &a);
        prop_assert!(aa == Scalar::one() || aa == Scalar::from_i64(-1));
        prop_assert_eq!(eps.eval(&a, &(&b + &c)), &eps.eval(&a, &b) * &eps.eval(&a, &c));
        prop_assert_eq!(eps.eval(&(&a + &b), &c), &eps.eval(&a, &c) * &eps.eval(&b, &c));
    }

    #[test]
    fn rational_field_laws(a in -50i64..50, b in 1i64..9, c in -50i64..50, d in 1i64..9, e in -9i64..9) {
        let (x, y, z) = (Scalar::ratio(a, b), Scalar::ratio(c, d), Scalar::from_i64(e));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
        prop_assert_eq!(&x - &x, Scalar::zero());
    }

    #[test]
    fn prime_field_laws(p in prop::sample::select(vec![2u64, 3, 5, 7, 101]), a in 0i64..500, b in 0i64..500) {
        let f = Field::Prime(p);
        let (x, y) = (f.from_i64(a), f.from_i64(b));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
        prop_assert_eq!(f.from_i64(p as i64), f.from_i64(0));
    }

    #[test]
    fn operations_are_multilinear(seed in any::<u64>(), n in 1usize..5, s in -4i64..4) {
        let obj = common::random_object(seed, n, &[("bracket3", 3)]);
        let op = obj.op("bracket3").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let mut v = || Vector::from_dense(&(0..n).map(|_| common::small_scalar(&mut rng)).collect::<Vec<_>>());
        let (x, x2, y, z) = (v(), v(), v(), v());
        let mut sum = x.clone();
        sum.axpy(&Scalar::one(), &x2);
        let mut expected = op.apply(&[&x, &y, &z]);
        expected.axpy(&Scalar::one(), &op.apply(&[&x2, &y, &z]));
        let mut middle = op.apply(&[&y, &x, &z]);
        middle.axpy(&Scalar::one(), &op.apply(&[&y, &x2, &z]));
        prop_assert_eq!(op.apply(&[&y, &sum, &z]), middle);
        prop_assert_eq!(op.apply(&[&sum, &y, &z]), expected);
        let s = Scalar::from_i64(s);
        prop_assert_eq!(op.apply(&[&y, &z.scaled(&s), &x]), op.apply(&[&y, &z, &x]).scaled(&s));
    }

    #[test]
    fn homogeneous_outputs_have_summed_degree(seed in any::<u64>(), n in 1usize..5) {
        let obj = common::random_object(seed, n, &[("bracket2", 2)]);
        let op = obj.op("bracket2").unwrap();
        for i in 0..n {
            for j in 0..n {
                let args = [GradedElement::basis(&obj.basis, i), GradedElement::basis(&obj.basis, j)];
                let OpValue::Element(out) = op_apply(&obj.basis, op, &args).unwrap() else { panic!("algebra op") };
                let d = obj.basis.degree_sum(&[i, j]);
                prop_assert_eq!(out.declared_degree.as_ref(), Some(&d));
                prop_assert!(out.coeffs.support().all(|k| *obj.degree(k) == d));
            }
        }
    }

    #[test]
    fn echelon_form_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-3i64..3, 4), 0..6)) {
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| Scalar::from_i64(x)).collect()).collect();
        let once = Subspace::span_dense(4, dense);
        let twice = Subspace::span_dense(4, once.dense_basis().to_vec());
        prop_assert_eq!(&once, &twice);
        for r in &rows {
            let v = Vector::from_dense(&r.iter().map(|&x| Scalar::from_i64(x)).collect::<Vec<_>>());
            prop_assert!(once.contains(&v));
        }
    }

    #[test]
    fn even_maps_form_a_unital_algebra(seed in any::<u64>(), n in 1usize..5) {
        let obj = common::random_object(seed, n, &[]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut even = || {
            let entries: Vec<_> = obj
                .basis
                .even_positions()
                .into_iter()
                .map(|(r, c)| (r, c, Scalar::from_i64(rng.gen_range(-2..3))))
                .collect();
            LinearMap::from_entries(n, n, entries).unwrap()
        };
        let (a, b, c) = (even(), even(), even());
        prop_assert!(a.compose(&b).is_even(&obj.basis, &obj.basis));
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        let id = LinearMap::identity(n);
        prop_assert_eq!(id.compose(&a), a.clone());
        prop_assert_eq!(a.compose(&id), a);
    }
}

#[test]
fn builtins_match_closed_forms() {
    for (kind, g) in builtins() {
        let eps = Bicharacter::builtin(kind, &g).unwrap();
        let r = g.rank();
        let range: Vec<Vec<i64>> = (0..7i64.pow(r as u32))
            .map(|code| (0..r).map(|k| (code / 7i64.pow(k as u32)) % 7 - 3).collect())
            .collect();
        for a in &range {
            for b in &range {
                let expected = match kind {
                    Builtin::Z2 => sign(a[0] * b[0]),
                    Builtin::Z2n => sign(a.iter().zip(b).map(|(x, y)| x * y).sum()),
                    Builtin::Z2xZ2 => sign(a[0] * b[1] - a[1] * b[0]),
                    Builtin::ZxZ => sign((a[0] + a[1]) * (b[0] + b[1])),
                };
                assert_eq!(eps.eval(&elem(&g, a), &elem(&g, b)), expected, "{kind:?} {a:?} {b:?}");
            }
        }
    }
}

#[test]
fn torsion_degrees_are_canonical() {
    let g = GradingGroup::new(1, vec![3]).unwrap();
    assert_eq!(g.element(&[2, -1]).unwrap(), g.element(&[2, 5]).unwrap());
    assert_eq!(g.element(&[0, 4]).unwrap().coords(), &[0, 1]);
}
