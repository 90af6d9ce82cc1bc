//! Seeded families of small instances, each passing its claimed identities.
//!
//! Families:
//! - `a`: the three-dimensional Leibniz superalgebra with `[e2,e2] = e1`;
//! - `b`: abelian algebras in dimensions 1 to 4 with seeded `Z2` degrees;
//! - `c`: associative instances (group algebras of `Z2` and `Z2×Z2` with a
//!   seeded rescaling of the group basis, small matrix algebras and `Λ(θ)`);
//! - `d`: commutator Lie color algebras of `c`;
//! - `e`: the two-dimensional nonabelian Lie algebra and its derived ternary bracket;
//! - `f`: trialgebras with all three products equal to a product from `c`;
//! - `g`: Leibniz-Poisson algebras from dialgebras built out of `c`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::Identity;
use crate::constructions::{derive_ternary_from_binary, from_associative, from_dialgebra, AssocTarget};
use crate::graded::{BasisEntry, GradedAlgebraObject, GradedBasis, LinearMap, MultilinearOp};
use crate::grading::{Bicharacter, Builtin, GradingGroup};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    /// `family/name`, unique within a corpus.
    pub id: String,
    pub object: GradedAlgebraObject,
}

impl CorpusEntry {
    pub fn family(&self) -> char {
        self.id.chars().next().expect("nonempty id")
    }
}

fn q(v: i64) -> Scalar {
    Scalar::from_i64(v)
}

fn z2_object(names: &[(&str, i64)]) -> GradedAlgebraObject {
    let g = GradingGroup::z2();
    let layout: Vec<(&str, Vec<i64>)> = names.iter().map(|&(n, d)| (n, vec![d])).collect();
    let refs: Vec<(&str, &[i64])> = layout.iter().map(|(n, d)| (*n, d.as_slice())).collect();
    let basis = GradedBasis::from_degrees(&g, &refs).expect("valid basis");
    let bc = Bicharacter::builtin(Builtin::Z2, &g).expect("Z2 builtin");
    GradedAlgebraObject::new(Field::Rationals, basis, bc)
}

/// `[e2,e2] = e1` on `<e1,e2> ⊕ <e3>`, `e3` odd.
pub fn worked_example() -> GradedAlgebraObject {
    let mut b = MultilinearOp::algebra(2);
    b.add_constant(&[1, 1], 0, &q(1));
    let mut obj = z2_object(&[("e1", 0), ("e2", 0), ("e3", 1)])
        .with_op("bracket2", b)
        .claim(Identity::Leibniz2);
    obj.comment = Some(
        "Introduced as a two-dimensional superspace <e1,e2> + <e3>; e3 spans the odd part and every bracket involving e3 is zero."
            .into(),
    );
    obj
}

/// `[e1,e2] = e1 = -[e2,e1]`, both even.
pub fn nonabelian_lie() -> GradedAlgebraObject {
    let mut b = MultilinearOp::algebra(2);
    b.add_constant(&[0, 1], 0, &q(1));
    b.add_constant(&[1, 0], 0, &q(-1));
    z2_object(&[("e1", 0), ("e2", 0)])
        .with_op("bracket2", b)
        .claim(Identity::Leibniz2)
        .claim(Identity::LieColor)
}

fn abelian(rng: &mut ChaCha8Rng, dim: usize) -> GradedAlgebraObject {
    let names: Vec<String> = (1..=dim).map(|i| format!("e{i}")).collect();
    let layout: Vec<(&str, i64)> = names.iter().map(|n| (n.as_str(), rng.gen_range(0..2))).collect();
    z2_object(&layout)
        .with_op("bracket2", MultilinearOp::algebra(2))
        .claim(Identity::Leibniz2)
        .claim(Identity::LieColor)
}

/// `K[G]` for `G = Z2^k` with basis `c_g g`, so `(c_g g)(c_h h) = (c_g c_h / c_{gh}) (c_{gh} gh)`.
/// For `k = 2` the product is twisted by `σ(a,b) = (-1)^{a1 b2}`, which makes it ε-commutative.
fn group_algebra(rng: &mut ChaCha8Rng, k: usize) -> GradedAlgebraObject {
    let g = GradingGroup::z2n(k);
    let (kind, label) = if k == 1 {
        (Builtin::Z2, "Z2")
    } else {
        (Builtin::Z2xZ2, "Z2xZ2")
    };
    let bc = Bicharacter::builtin(kind, &g).expect("builtin");
    let elems: Vec<Vec<i64>> = (0..1usize << k)
        .map(|m| (0..k).map(|b| (m >> (k - 1 - b) & 1) as i64).collect())
        .collect();
    let entries = elems
        .iter()
        .map(|c| BasisEntry {
            name: format!("g{}", c.iter().map(i64::to_string).collect::<String>()),
            degree: g.element(c).expect("valid degree"),
        })
        .collect();
    let basis = GradedBasis::new(g, entries).expect("valid basis");
    let scales = [q(1), q(2), q(-1), Scalar::ratio(1, 2), q(3)];
    let c: Vec<Scalar> = (0..elems.len())
        .map(|_| scales.choose(rng).expect("nonempty").clone())
        .collect();
    let mut p = MultilinearOp::algebra(2);
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| (x + y) % 2).collect();
            let t = elems.iter().position(|e| *e == sum).expect("closed");
            let mut coef = &(&c[i] * &c[j]) / &c[t];
            if k == 2 && a[0] * b[1] == 1 {
                coef = -coef;
            }
            p.add_constant(&[i, j], t, &coef);
        }
    }
    let mut obj = GradedAlgebraObject::new(Field::Rationals, basis, bc)
        .with_op("product2", p)
        .claim(Identity::Assoc);
    if k == 2 {
        obj.add_claim(Identity::EpsComm);
    }
    obj.comment = Some(if k == 2 {
        format!("twisted group algebra of {label}")
    } else {
        format!("group algebra of {label}")
    });
    obj
}

/// Matrix units `e_ij` with `e_ij e_jk = e_ik`, restricted to `units`.
fn matrix_units(units: &[(usize, usize)], degree: impl Fn(usize, usize) -> i64, trivial: bool) -> GradedAlgebraObject {
    let names: Vec<String> = units.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let mut obj = if trivial {
        let g = GradingGroup::trivial();
        let layout: Vec<(&str, &[i64])> = names.iter().map(|n| (n.as_str(), &[][..])).collect();
        let basis = GradedBasis::from_degrees(&g, &layout).expect("valid basis");
        GradedAlgebraObject::new(Field::Rationals, basis, Bicharacter::trivial(g))
    } else {
        let layout: Vec<(&str, i64)> = names
            .iter()
            .zip(units)
            .map(|(n, &(i, j))| (n.as_str(), degree(i, j)))
            .collect();
        z2_object(&layout)
    };
    let mut p = MultilinearOp::algebra(2);
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                let t = units.iter().position(|&u| u == (i, l)).expect("closed");
                p.add_constant(&[a, b], t, &q(1));
            }
        }
    }
    obj.set_op("product2", p);
    obj.add_claim(Identity::Assoc);
    obj
}

const FULL: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// `M(1|1)`: diagonal units even, off-diagonal odd.
fn matrix_super() -> GradedAlgebraObject {
    matrix_units(&FULL, |i, j| (i != j) as i64, false)
}

/// Upper triangular 2×2 matrices, `e12` odd.
fn upper_triangular() -> GradedAlgebraObject {
    matrix_units(&[(0, 0), (0, 1), (1, 1)], |i, j| (i != j) as i64, false)
}

/// `Λ(θ)`: unit even, `θ` odd, `θθ = 0`.
fn exterior() -> GradedAlgebraObject {
    let mut p = MultilinearOp::algebra(2);
    p.add_constant(&[0, 0], 0, &q(1));
    p.add_constant(&[0, 1], 1, &q(1));
    p.add_constant(&[1, 0], 1, &q(1));
    z2_object(&[("1", 0), ("t", 1)])
        .with_op("product2", p)
        .claim(Identity::Assoc)
        .claim(Identity::EpsComm)
}

/// `M_2` with trivial grading and the transpose as `theta`.
fn matrix_transpose() -> GradedAlgebraObject {
    let mut obj = matrix_units(&FULL, |_, _| 0, true);
    let mut t = LinearMap::zero(4, 4);
    for (a, &(i, j)) in FULL.iter().enumerate() {
        let b = FULL.iter().position(|&u| u == (j, i)).expect("closed");
        t.set_entry(b, a, q(1));
    }
    obj.maps.insert("theta".into(), t);
    obj
}

fn three_products(a: &GradedAlgebraObject) -> GradedAlgebraObject {
    let p = a.op("product2").expect("associative instance").clone();
    let mut t = a.empty_like(a.basis.clone());
    t.comment = a.comment.clone();
    t.with_op("left", p.clone())
        .with_op("middle", p.clone())
        .with_op("right", p)
}

/// Trialgebra with `⊣ = ⊥ = ⊢` the product of an associative instance.
pub fn trialgebra_of(a: &GradedAlgebraObject) -> GradedAlgebraObject {
    three_products(a).claim(Identity::Trialgebra)
}

/// Dialgebra with `⊣ = ⊢` the product of an associative instance.
pub fn dialgebra_of(a: &GradedAlgebraObject) -> GradedAlgebraObject {
    let mut d = three_products(a);
    d.ops.remove("middle");
    d.claim(Identity::Dialgebra)
}

/// Deterministic corpus for a seed.
pub fn generate_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![CorpusEntry {
        id: "a/worked_example".into(),
        object: worked_example(),
    }];
    for d in 1..=4 {
        out.push(CorpusEntry {
            id: format!("b/abelian_{d}"),
            object: abelian(&mut rng, d),
        });
    }
    let assoc = vec![
        ("group_z2", group_algebra(&mut rng, 1)),
        ("twisted_z2xz2", group_algebra(&mut rng, 2)),
        ("matrix_super", matrix_super()),
        ("upper_triangular", upper_triangular()),
        ("matrix_transpose", matrix_transpose()),
        ("exterior", exterior()),
    ];
    for (name, obj) in &assoc {
        out.push(CorpusEntry {
            id: format!("c/{name}"),
            object: obj.clone(),
        });
    }
    for (name, obj) in &assoc {
        let lie = from_associative(obj, &AssocTarget::CommutatorLie).expect("associative input");
        out.push(CorpusEntry {
            id: format!("d/commutator_{name}"),
            object: lie,
        });
    }
    let lie = nonabelian_lie();
    let ternary = derive_ternary_from_binary(&lie).expect("Leibniz input");
    out.push(CorpusEntry {
        id: "e/nonabelian_lie".into(),
        object: lie,
    });
    out.push(CorpusEntry {
        id: "e/nonabelian_ternary".into(),
        object: ternary,
    });
    for (name, obj) in &assoc {
        out.push(CorpusEntry {
            id: format!("f/trialgebra_{name}"),
            object: trialgebra_of(obj),
        });
    }
    for (name, obj) in &assoc {
        out.push(CorpusEntry {
            id: format!("g/poisson_{name}"),
            object: from_dialgebra(&dialgebra_of(obj)).expect("dialgebra input"),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_claims;

    #[test]
    fn every_member_passes_its_claims() {
        for e in generate_corpus(7) {
            assert!(!e.object.claims.is_empty(), "{} claims nothing", e.id);
            for (id, r) in check_claims(&e.object).unwrap() {
                assert!(r.passed(), "{} fails {id}:\n{r}", e.id);
            }
        }
    }
}
