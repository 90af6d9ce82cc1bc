use crate::axioms::{Identity, Predicate, Variant};
use crate::error::{Error, Result};
use crate::graded::{BimoduleObject, GradedAlgebraObject, GradedBasis, LinearMap, MultilinearOp, OpOutput, Vector};
use crate::grading::Bicharacter;
use crate::linalg;
use crate::report::{AxiomReport, Value, Witness};
use crate::scalar::{Field, Scalar};

use super::{require, require_bimodule, require_operator, require_report, same_grading, tabulate, variant_note};

fn u(i: usize) -> Vector {
    Vector::unit(i)
}

fn sc(c: &Scalar, v: Vector) -> Vector {
    if c.is_one() {
        v
    } else {
        v.scaled(c)
    }
}

/// `[x,y,z] := [x,[y,z]]`.
pub fn derive_ternary_from_binary(l: &GradedAlgebraObject) -> Result<GradedAlgebraObject> {
    let b = l.op("bracket2")?;
    require(l, Identity::Leibniz2, "input")?;
    let t = tabulate(l.dim(), 3, |k| b.apply(&[&u(k[0]), &b.apply_basis(&[k[1], k[2]])]));
    Ok(l.empty_like(l.basis.clone())
        .with_op("bracket3", t)
        .claim(Identity::TernaryLeibniz)
        .with_provenance("derive_ternary_from_binary"))
}

/// `{x,y} := [x,y,ξ]` for a degree-zero basis vector `ξ` with `[ξ,x,ξ] = 0`.
pub fn binary_from_ternary_at(l: &GradedAlgebraObject, xi: usize) -> Result<GradedAlgebraObject> {
    let t = l.op("bracket3")?;
    if xi >= l.dim() {
        return Err(Error::input(format!("basis index {xi} out of range")));
    }
    if !l.degree(xi).is_zero() {
        return Err(Error::input(format!(
            "{} has degree {}, not zero",
            l.basis.name(xi),
            l.degree(xi)
        )));
    }
    require(l, Identity::TernaryLeibniz, "input")?;
    let mut report = AxiomReport::new(l.labels());
    for i in 0..l.dim() {
        let v = t.apply_basis(&[xi, i, xi]);
        let ok = v.is_zero();
        report.record(
            || Witness {
                equation: "contraction_condition".into(),
                tuple: vec![xi, i, xi],
                lhs: Value::Vector(v.clone()),
                rhs: Value::Vector(Vector::zero()),
            },
            ok,
        );
    }
    require_report(report, || format!("[{0}, x, {0}] does not vanish", l.basis.name(xi)))?;
    let b = tabulate(l.dim(), 2, |k| t.apply_basis(&[k[0], k[1], xi]));
    Ok(l.empty_like(l.basis.clone())
        .with_op("bracket2", b)
        .claim(Identity::Leibniz2)
        .with_provenance(format!("binary_from_ternary_at({})", l.basis.name(xi))))
}

/// Operator twists of a binary bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    Averaging,
    Centroid,
    Reynolds,
    RotaBaxter(Scalar),
    Nijenhuis,
}

impl Twist {
    fn predicate(&self) -> (Predicate, Option<&Scalar>) {
        match self {
            Twist::Averaging => (Predicate::Averaging, None),
            Twist::Centroid => (Predicate::Centroid2, None),
            Twist::Reynolds => (Predicate::Reynolds2, None),
            Twist::RotaBaxter(w) => (Predicate::RotaBaxter2, Some(w)),
            Twist::Nijenhuis => (Predicate::Nijenhuis, None),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Twist::Averaging => "averaging".into(),
            Twist::Centroid => "centroid".into(),
            Twist::Reynolds => "reynolds".into(),
            Twist::RotaBaxter(w) => format!("rota_baxter({w})"),
            Twist::Nijenhuis => "nijenhuis".into(),
        }
    }

    /// Whether the map is also a morphism from the twisted bracket to the original.
    pub fn has_morphism_clause(&self) -> bool {
        matches!(self, Twist::Reynolds | Twist::RotaBaxter(_) | Twist::Nijenhuis)
    }
}

fn injectivity_report(obj: &GradedAlgebraObject, m: &LinearMap) -> AxiomReport {
    let n = m.cols();
    let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|r| (0..n).map(|c| m.entry(r, c)).collect()).collect();
    let mut report = AxiomReport::new(obj.labels());
    for k in linalg::nullspace(&rows, n) {
        report.push_witness(Witness {
            equation: "injective".into(),
            tuple: vec![],
            lhs: Value::Vector(m.apply(&Vector::from_dense(&k))),
            rhs: Value::Vector(Vector::from_dense(&k)),
        });
    }
    report.checked_count = 1;
    report
}

/// New bracket from an operator on a Leibniz bracket.
pub fn twist_binary(l: &GradedAlgebraObject, m: &LinearMap, kind: &Twist) -> Result<GradedAlgebraObject> {
    let b = l.op("bracket2")?;
    require(l, Identity::Leibniz2, "input")?;
    let (pred, weight) = kind.predicate();
    require_operator(l, m, pred, weight, Some("bracket2"))?;
    if *kind == Twist::Averaging && !m.is_injective() {
        return Err(Error::precondition(
            "averaging map is not injective",
            injectivity_report(l, m),
        ));
    }
    let w = weight.map(|w| l.field.coerce(w)).transpose()?;
    let br = |x: &Vector, y: &Vector| b.apply(&[x, y]);
    let f = |x: &Vector| m.apply(x);
    let twisted = tabulate(l.dim(), 2, |k| {
        let (x, y) = (u(k[0]), u(k[1]));
        match kind {
            Twist::Averaging | Twist::Centroid => br(&f(&x), &y),
            Twist::Reynolds => &(&br(&f(&x), &y) + &br(&x, &f(&y))) - &br(&f(&x), &f(&y)),
            Twist::RotaBaxter(_) => {
                let mut v = &br(&f(&x), &y) + &br(&x, &f(&y));
                v.axpy(w.as_ref().expect("weight"), &br(&x, &y));
                v
            }
            Twist::Nijenhuis => &(&br(&f(&x), &y) + &br(&x, &f(&y))) - &f(&br(&x, &y)),
        }
    });
    Ok(l.empty_like(l.basis.clone())
        .with_op("bracket2", twisted)
        .claim(Identity::Leibniz2)
        .with_provenance(format!("twist_binary({})", kind.name())))
}

/// Operator twists of a ternary bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TernaryTwist {
    /// `[θx, y, z]`
    CentroidA,
    /// `[θx, θy, z]`
    CentroidB,
    /// `[θx, θy, θz]`
    CentroidC,
    Reynolds3,
    RotaBaxter3(Scalar),
}

impl TernaryTwist {
    pub fn name(&self) -> String {
        match self {
            TernaryTwist::CentroidA => "centroid_a".into(),
            TernaryTwist::CentroidB => "centroid_b".into(),
            TernaryTwist::CentroidC => "centroid_c".into(),
            TernaryTwist::Reynolds3 => "reynolds3".into(),
            TernaryTwist::RotaBaxter3(w) => format!("rota_baxter3({w})"),
        }
    }
}

pub fn ternary_twist(l: &GradedAlgebraObject, m: &LinearMap, kind: &TernaryTwist) -> Result<GradedAlgebraObject> {
    let t = l.op("bracket3")?;
    require(l, Identity::TernaryLeibniz, "input")?;
    let (pred, weight) = match kind {
        TernaryTwist::CentroidA | TernaryTwist::CentroidB | TernaryTwist::CentroidC => (Predicate::Centroid3, None),
        TernaryTwist::Reynolds3 => (Predicate::Reynolds3, None),
        TernaryTwist::RotaBaxter3(w) => (Predicate::RotaBaxter3, Some(w)),
    };
    require_operator(l, m, pred, weight, Some("bracket3"))?;
    let w = weight.map(|w| l.field.coerce(w)).transpose()?;
    let br = |x: &Vector, y: &Vector, z: &Vector| t.apply(&[x, y, z]);
    let twisted = tabulate(l.dim(), 3, |k| {
        let (x, y, z) = (u(k[0]), u(k[1]), u(k[2]));
        let (fx, fy, fz) = (m.apply(&x), m.apply(&y), m.apply(&z));
        match kind {
            TernaryTwist::CentroidA => br(&fx, &y, &z),
            TernaryTwist::CentroidB => br(&fx, &fy, &z),
            TernaryTwist::CentroidC => br(&fx, &fy, &fz),
            TernaryTwist::Reynolds3 => {
                let mut v = &(&br(&fx, &fy, &z) + &br(&fx, &y, &fz)) + &br(&x, &fy, &fz);
                v = &v - &br(&fx, &fy, &fz);
                v
            }
            TernaryTwist::RotaBaxter3(_) => {
                let lam = w.as_ref().expect("weight");
                let mut v = &(&br(&fx, &fy, &z) + &br(&fx, &y, &fz)) + &br(&x, &fy, &fz);
                let one = &(&br(&fx, &y, &z) + &br(&x, &fy, &z)) + &br(&x, &y, &fz);
                v.axpy(lam, &one);
                v.axpy(&(lam * lam), &br(&x, &y, &z));
                v
            }
        }
    });
    Ok(l.empty_like(l.basis.clone())
        .with_op("bracket3", twisted)
        .claim(Identity::TernaryLeibniz)
        .with_provenance(format!("ternary_twist({})", kind.name())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumKind {
    Binary,
    Ternary,
    TernaryPoisson,
}

impl SumKind {
    fn identity(self) -> Identity {
        match self {
            SumKind::Binary => Identity::Leibniz2,
            SumKind::Ternary => Identity::TernaryLeibniz,
            SumKind::TernaryPoisson => Identity::TernaryLeibnizPoisson,
        }
    }

    fn ops(self) -> &'static [&'static str] {
        match self {
            SumKind::Binary => &["bracket2"],
            SumKind::Ternary => &["bracket3"],
            SumKind::TernaryPoisson => &["product2", "bracket3"],
        }
    }
}

/// Names in a direct sum: `1.x` for the first summand, `2.x` for the second.
pub(crate) const SUM_PREFIXES: (&str, &str) = ("1.", "2.");

/// Componentwise operations on `a ⊕ b`.
pub fn direct_sum(a: &GradedAlgebraObject, b: &GradedAlgebraObject, kind: SumKind) -> Result<GradedAlgebraObject> {
    same_grading(a, b)?;
    for name in kind.ops() {
        a.op(name)?;
        b.op(name)?;
    }
    require(a, kind.identity(), "first summand")?;
    require(b, kind.identity(), "second summand")?;
    let n = a.dim();
    let mut out = a.empty_like(a.basis.concat(&b.basis, SUM_PREFIXES)?);
    for name in kind.ops() {
        let shifted = b.op(name)?.reindex(|i| i + n, |i| i + n);
        out.set_op(name, a.op(name)?.plus(&shifted));
    }
    Ok(out
        .claim(kind.identity())
        .with_provenance(format!("direct_sum({kind:?})")))
}

/// `[(x,a),(y,b)] = ([x,y], [a,b] + [x,b] + [a,y])` on `L ⊕ 𝓛`.
///
/// `action` carries `L` as its algebra, the basis of `𝓛` as its module
/// basis, and the mixed brackets as `left_act` (`L × 𝓛`) and `right_act`
/// (`𝓛 × L`); the bracket of `lc` becomes its `module_bracket`.
pub fn semidirect_sum(
    l: &GradedAlgebraObject,
    lc: &GradedAlgebraObject,
    action: &BimoduleObject,
) -> Result<GradedAlgebraObject> {
    same_grading(l, lc)?;
    if action.algebra != *l {
        return Err(Error::input("action is over a different algebra"));
    }
    let degrees_match =
        action.module_basis.len() == lc.dim() && (0..lc.dim()).all(|i| action.module_basis.degree(i) == lc.degree(i));
    if !degrees_match {
        return Err(Error::input(
            "action module basis does not match the acting algebra's basis",
        ));
    }
    require(l, Identity::Leibniz2, "first algebra")?;
    require(lc, Identity::Leibniz2, "second algebra")?;
    let n = l.dim();
    let mut full = action.clone();
    full.actions.insert(
        "module_bracket".into(),
        lc.op("bracket2")?.reindex(|i| i + n, |i| i + n),
    );
    require_bimodule(&full, Identity::Action)?;
    let combined = full.combined_object()?;
    let mut out = l.empty_like(combined.basis.clone());
    out.set_op("bracket2", combined.op("bracket2")?.clone());
    Ok(out.claim(Identity::Leibniz2).with_provenance("semidirect_sum"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialgebraTarget {
    LeibnizPoisson,
    TernaryLeibniz,
    StarAssoc,
}

fn trivially_graded(obj: &GradedAlgebraObject) -> bool {
    (0..obj.dim()).all(|i| (0..obj.dim()).all(|j| obj.eps(i, j).is_one()))
}

/// Structures derived from the three products `⊣` (`left`), `⊥` (`middle`), `⊢` (`right`).
pub fn from_trialgebra(
    t: &GradedAlgebraObject,
    target: TrialgebraTarget,
    variant: Variant,
) -> Result<GradedAlgebraObject> {
    let (lt, md, rt) = (t.op("left")?, t.op("middle")?, t.op("right")?);
    if target == TrialgebraTarget::StarAssoc && !trivially_graded(t) {
        return Err(Error::input(
            "the star product is defined for trivially graded trialgebras",
        ));
    }
    require(t, Identity::Trialgebra, "input")?;
    let n = t.dim();
    let mut out = t.empty_like(t.basis.clone());
    match target {
        TrialgebraTarget::LeibnizPoisson => {
            let b = tabulate(n, 2, |k| {
                let (i, j) = (k[0], k[1]);
                let tail = match variant {
                    Variant::Printed => rt.apply_basis(&[i, j]),
                    Variant::Amended => rt.apply_basis(&[j, i]),
                };
                let mut v = lt.apply_basis(&[i, j]);
                v.axpy(&-t.eps(i, j), &tail);
                v
            });
            out.set_op("product2", md.clone());
            out.set_op("bracket2", b);
            out.add_claim(Identity::LeibnizPoisson);
            out.variant = Some(variant);
        }
        TrialgebraTarget::TernaryLeibniz => {
            let c = tabulate(n, 3, |k| {
                let (x, y, z) = (k[0], k[1], k[2]);
                let mut w = md.apply_basis(&[y, z]);
                w.axpy(&-t.eps(y, z), &md.apply_basis(&[z, y]));
                let mut v = lt.apply(&[&u(x), &w]);
                let yz = t.basis.degree_sum(&[y, z]);
                v.axpy(&-t.bicharacter.eval(t.degree(x), &yz), &rt.apply(&[&w, &u(x)]));
                v
            });
            out.set_op("bracket3", c);
            out.add_claim(Identity::TernaryLeibniz);
        }
        TrialgebraTarget::StarAssoc => {
            out.set_op("product2", star_product(t)?);
            out.add_claim(Identity::Assoc);
        }
    }
    Ok(out.with_provenance(format!("from_trialgebra({target:?}, {})", variant_note(variant))))
}

/// `x ∗ y = x⊣y + x⊢y − x⊥y`.
fn star_product(t: &GradedAlgebraObject) -> Result<MultilinearOp> {
    let (lt, md, rt) = (t.op("left")?, t.op("middle")?, t.op("right")?);
    Ok(lt.plus(rt).plus(&md.scaled(&Scalar::from_i64(-1))))
}

/// `x⋆y = R(x)∗y − y∗R(x)` (weight 0) or `R(x)∗y − y∗R(x) − x∗y` (weight −1).
pub fn rb_trialgebra_derived(
    t: &GradedAlgebraObject,
    r: &LinearMap,
    weight: &Scalar,
    target: Identity,
) -> Result<GradedAlgebraObject> {
    if !trivially_graded(t) {
        return Err(Error::input("requires a trivially graded trialgebra"));
    }
    let minus_one = Scalar::from_i64(-1);
    if !weight.is_zero() && *weight != minus_one {
        return Err(Error::input(format!("weight must be 0 or -1, got {weight}")));
    }
    if target != Identity::LeftSymmetric && target != Identity::Assoc {
        return Err(Error::input(format!(
            "target must be LEFT_SYMMETRIC or ASSOC, got {target}"
        )));
    }
    require(t, Identity::Trialgebra, "input")?;
    let star = star_product(t)?;
    let star_obj = t.empty_like(t.basis.clone()).with_op("product2", star.clone());
    require_operator(&star_obj, r, Predicate::RotaBaxter2, Some(weight), Some("product2"))?;
    let p = tabulate(t.dim(), 2, |k| {
        let (x, y) = (u(k[0]), u(k[1]));
        let rx = r.apply(&x);
        let mut v = &star.apply(&[&rx, &y]) - &star.apply(&[&y, &rx]);
        if !weight.is_zero() {
            v = &v - &star.apply(&[&x, &y]);
        }
        v
    });
    Ok(t.empty_like(t.basis.clone())
        .with_op("product2", p)
        .claim(target)
        .with_provenance(format!("rb_trialgebra_derived(weight {weight})")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssocTarget {
    CommutatorLie,
    TernaryCommutator,
    Lts,
    JtsPlain,
    JtsInvolution(LinearMap),
    /// The variant selects the commutator: printed `x·y·z − ε(y,z)x·y·z`,
    /// amended `x·y·z − ε(y,z)x·z·y`.
    Comstrans(Variant),
}

impl AssocTarget {
    pub fn name(&self) -> String {
        match self {
            AssocTarget::CommutatorLie => "commutator_lie".into(),
            AssocTarget::TernaryCommutator => "ternary_commutator".into(),
            AssocTarget::Lts => "lts".into(),
            AssocTarget::JtsPlain => "jts_plain".into(),
            AssocTarget::JtsInvolution(_) => "jts_involution".into(),
            AssocTarget::Comstrans(v) => format!("comstrans({v})"),
        }
    }
}

/// `x(yz − ε(y,z)zy) − ε(x,y+z)(yz − ε(y,z)zy)x`, the nested commutator.
fn nested_commutator(a: &GradedAlgebraObject, p: &MultilinearOp) -> MultilinearOp {
    let comm = commutator(a, p);
    tabulate(a.dim(), 3, |k| {
        let w = comm.apply_basis(&[k[1], k[2]]);
        let mut v = p.apply(&[&u(k[0]), &w]);
        let yz = a.basis.degree_sum(&[k[1], k[2]]);
        v.axpy(&-a.bicharacter.eval(a.degree(k[0]), &yz), &p.apply(&[&w, &u(k[0])]));
        v
    })
}

/// `x·y − ε(x,y) y·x`.
fn commutator(a: &GradedAlgebraObject, p: &MultilinearOp) -> MultilinearOp {
    tabulate(a.dim(), 2, |k| {
        let mut v = p.apply_basis(&[k[0], k[1]]);
        v.axpy(&-a.eps(k[0], k[1]), &p.apply_basis(&[k[1], k[0]]));
        v
    })
}

/// `ε(x,y)ε(x,z)ε(y,z)`.
fn outer_sign(a: &GradedAlgebraObject, x: usize, y: usize, z: usize) -> Scalar {
    &(&a.eps(x, y) * &a.eps(x, z)) * &a.eps(y, z)
}

/// Structures on an associative algebra.
pub fn from_associative(a: &GradedAlgebraObject, target: &AssocTarget) -> Result<GradedAlgebraObject> {
    let p = a.op("product2")?;
    require(a, Identity::Assoc, "input")?;
    let n = a.dim();
    let pr = |x: &Vector, y: &Vector| p.apply(&[x, y]);
    let mut out = a.empty_like(a.basis.clone());
    match target {
        AssocTarget::CommutatorLie => {
            out.set_op("product2", p.clone());
            out.set_op("bracket2", commutator(a, p));
            out.add_claim(Identity::LieColor);
            out.add_claim(Identity::LeibnizPoisson);
        }
        AssocTarget::TernaryCommutator => {
            out.set_op("product2", p.clone());
            out.set_op("bracket3", nested_commutator(a, p));
            out.add_claim(Identity::TernaryLeibniz);
            out.add_claim(Identity::TernaryLeibnizPoisson);
        }
        AssocTarget::Lts => {
            let t = tabulate(n, 3, |k| {
                let (x, y, z) = (u(k[0]), u(k[1]), u(k[2]));
                let e_yz = a.eps(k[1], k[2]);
                let e_x_yz = a.bicharacter.eval(a.degree(k[0]), &a.basis.degree_sum(&[k[1], k[2]]));
                let mut v = pr(&x, &pr(&y, &z));
                v.axpy(&-e_yz.clone(), &pr(&x, &pr(&z, &y)));
                v.axpy(&-e_x_yz.clone(), &pr(&pr(&y, &z), &x));
                v.axpy(&(&e_x_yz * &e_yz), &pr(&pr(&z, &y), &x));
                v
            });
            out.set_op("bracket3", t);
            out.add_claim(Identity::Lts);
        }
        AssocTarget::JtsPlain => {
            let t = tabulate(n, 3, |k| {
                let (x, y, z) = (u(k[0]), u(k[1]), u(k[2]));
                let mut v = pr(&pr(&x, &y), &z);
                v.axpy(&outer_sign(a, k[0], k[1], k[2]), &pr(&pr(&z, &y), &x));
                v
            });
            out.set_op("bracket3", t);
            out.add_claim(Identity::Jts);
        }
        AssocTarget::JtsInvolution(theta) => {
            require_operator(a, theta, Predicate::InvolutionAntiauto, None, Some("product2"))?;
            let t = tabulate(n, 3, |k| {
                let (x, y, z) = (u(k[0]), u(k[1]), u(k[2]));
                let ty = theta.apply(&y);
                let mut v = pr(&pr(&x, &ty), &z);
                v.axpy(&outer_sign(a, k[0], k[1], k[2]), &pr(&pr(&z, &ty), &x));
                v
            });
            out.set_op("bracket3", t);
            out.maps.insert("theta".into(), theta.clone());
            out.add_claim(Identity::Jts);
        }
        AssocTarget::Comstrans(variant) => {
            let comm = tabulate(n, 3, |k| {
                let (x, y, z) = (u(k[0]), u(k[1]), u(k[2]));
                let xyz = pr(&pr(&x, &y), &z);
                let second = match variant {
                    Variant::Printed => xyz.clone(),
                    Variant::Amended => pr(&pr(&x, &z), &y),
                };
                let mut v = xyz;
                v.axpy(&-a.eps(k[1], k[2]), &second);
                v
            });
            let trans = tabulate(n, 3, |k| {
                let (x, y, z) = (u(k[0]), u(k[1]), u(k[2]));
                let mut v = pr(&pr(&x, &y), &z);
                let e = a.bicharacter.eval(&a.basis.degree_sum(&[k[0], k[1]]), a.degree(k[2]));
                v.axpy(&-e, &pr(&pr(&z, &x), &y));
                v
            });
            out.set_op("commutator3", comm);
            out.set_op("translator3", trans);
            out.add_claim(Identity::Comstrans);
            out.variant = Some(Variant::Printed);
        }
    }
    Ok(out.with_provenance(format!("from_associative({})", target.name())))
}

/// `[x,y] := x⊣y − ε(x,y) y⊢x` with product `⊣`.
pub fn from_dialgebra(d: &GradedAlgebraObject) -> Result<GradedAlgebraObject> {
    let (lt, rt) = (d.op("left")?, d.op("right")?);
    require(d, Identity::Dialgebra, "input")?;
    let b = tabulate(d.dim(), 2, |k| {
        let mut v = lt.apply_basis(&[k[0], k[1]]);
        v.axpy(&-d.eps(k[0], k[1]), &rt.apply_basis(&[k[1], k[0]]));
        v
    });
    Ok(d.empty_like(d.basis.clone())
        .with_op("product2", lt.clone())
        .with_op("bracket2", b)
        .claim(Identity::LeibnizPoisson)
        .with_provenance("from_dialgebra"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoissonRecipe {
    /// `[x,y,z] := [x,[y,z]]`
    NestedBracket,
    /// `{x,y,z} := [x, y·z]`
    BracketOfProduct,
}

pub fn poisson_to_ternary(p: &GradedAlgebraObject, recipe: PoissonRecipe) -> Result<GradedAlgebraObject> {
    let (prod, b) = (p.op("product2")?, p.op("bracket2")?);
    require(p, Identity::LeibnizPoisson, "input")?;
    let t = tabulate(p.dim(), 3, |k| {
        let inner = match recipe {
            PoissonRecipe::NestedBracket => b.apply_basis(&[k[1], k[2]]),
            PoissonRecipe::BracketOfProduct => prod.apply_basis(&[k[1], k[2]]),
        };
        b.apply(&[&u(k[0]), &inner])
    });
    Ok(p.empty_like(p.basis.clone())
        .with_op("product2", prod.clone())
        .with_op("bracket3", t)
        .claim(Identity::TernaryLeibnizPoisson)
        .with_provenance(format!("poisson_to_ternary({recipe:?})")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieTarget {
    Lts,
    Comstrans,
}

/// `[x,y,z] := [x,[y,z]]` on a Lie color algebra, as a triple system or as
/// both operations of a Comstrans algebra.
pub fn from_lie(l: &GradedAlgebraObject, target: LieTarget) -> Result<GradedAlgebraObject> {
    let b = l.op("bracket2")?;
    require(l, Identity::LieColor, "input")?;
    let t = tabulate(l.dim(), 3, |k| b.apply(&[&u(k[0]), &b.apply_basis(&[k[1], k[2]])]));
    let mut out = l.empty_like(l.basis.clone());
    match target {
        LieTarget::Lts => {
            out.set_op("bracket3", t);
            out.add_claim(Identity::Lts);
        }
        LieTarget::Comstrans => {
            out.set_op("commutator3", t.clone());
            out.set_op("translator3", t);
            out.add_claim(Identity::Comstrans);
            out.variant = Some(Variant::Printed);
        }
    }
    Ok(out.with_provenance(format!("from_lie({target:?})")))
}

/// `{x,y,z} := [x,y,z] − ε(y,z)[x,z,y]`.
pub fn jts_to_lts(j: &GradedAlgebraObject) -> Result<GradedAlgebraObject> {
    let t = j.op("bracket3")?;
    require(j, Identity::Jts, "input")?;
    let s = tabulate(j.dim(), 3, |k| {
        let mut v = t.apply_basis(&[k[0], k[1], k[2]]);
        v.axpy(&-j.eps(k[1], k[2]), &t.apply_basis(&[k[0], k[2], k[1]]));
        v
    });
    Ok(j.empty_like(j.basis.clone())
        .with_op("bracket3", s)
        .claim(Identity::Lts)
        .with_provenance("jts_to_lts"))
}

/// `[x,y,z] = <x,y,z> = f(x,z)y − ε(x,z)f(y,z)x` for an even ε-symmetric form `f`.
pub fn comstrans_from_bilinear_form(
    field: Field,
    basis: &GradedBasis,
    bc: &Bicharacter,
    f: &MultilinearOp,
) -> Result<GradedAlgebraObject> {
    if f.arity() != 2 || f.output() != OpOutput::Scalar {
        return Err(Error::input("expected a scalar-valued bilinear form"));
    }
    f.check_bounds(basis.len())?;
    let obj = GradedAlgebraObject::new(field, basis.clone(), bc.clone()).with_op("form2", f.clone());
    let grading = obj.grading_check();
    if !grading.passed() {
        return Err(Error::input("form is not even"));
    }
    let n = basis.len();
    let mut report = AxiomReport::new(basis.names());
    for i in 0..n {
        for j in 0..n {
            let lhs = f.scalar_on_basis(&[i, j]);
            let rhs = &obj.eps(i, j) * &f.scalar_on_basis(&[j, i]);
            let ok = lhs == rhs;
            report.record(
                || Witness {
                    equation: "form_symmetry".into(),
                    tuple: vec![i, j],
                    lhs: Value::Scalar(lhs.clone()),
                    rhs: Value::Scalar(rhs.clone()),
                },
                ok,
            );
        }
    }
    require_report(report, || "form is not ε-symmetric".into())?;
    let t = tabulate(n, 3, |k| {
        let (x, y, z) = (k[0], k[1], k[2]);
        let mut v = sc(&f.scalar_on_basis(&[x, z]), u(y));
        v.axpy(&-(&obj.eps(x, z) * &f.scalar_on_basis(&[y, z])), &u(x));
        v
    });
    let mut out = obj.with_op("commutator3", t.clone()).with_op("translator3", t);
    out.variant = Some(Variant::Printed);
    Ok(out
        .claim(Identity::Comstrans)
        .with_provenance("comstrans_from_bilinear_form"))
}

/// `x ·op y := ε(x,y) y·x`, bracket unchanged.
pub fn opposite_product(p: &GradedAlgebraObject) -> Result<GradedAlgebraObject> {
    let prod = p.op("product2")?;
    p.op("bracket3")?;
    require(p, Identity::TernaryLeibnizPoisson, "input")?;
    let op = tabulate(p.dim(), 2, |k| sc(&p.eps(k[0], k[1]), prod.apply_basis(&[k[1], k[0]])));
    let mut out = p.clone();
    out.set_op("product2", op);
    out.claims.clear();
    out.provenance.push("opposite_product".into());
    Ok(out.claim(Identity::TernaryLeibnizPoisson))
}
