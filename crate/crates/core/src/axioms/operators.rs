//! Operator predicates: centroid, averaging, Nijenhuis, Reynolds, Rota-Baxter,
//! morphisms and involutive anti-automorphisms.

use crate::error::{Error, Result};
use crate::graded::{GradedAlgebraObject, LinearMap, Vector};
use crate::report::AxiomReport;
use crate::scalar::Scalar;

use super::engine::{run, sc, Arg, Ctx, Equation};
use super::{require_square_even, require_weight, CheckOptions, Predicate};

type Eqn<'a, 'c> = Equation<'a, Ctx<'c>>;

/// Operation a predicate of the given arity refers to by default:
/// `bracket2`, else `product2`; `bracket3`, else `commutator3`.
pub fn default_op(obj: &GradedAlgebraObject, arity: usize) -> Result<&'static str> {
    let candidates: &[&'static str] = match arity {
        2 => &["bracket2", "product2"],
        3 => &["bracket3", "commutator3"],
        _ => &[],
    };
    candidates
        .iter()
        .copied()
        .find(|n| obj.has_op(n))
        .ok_or_else(|| Error::input(format!("object has no operation of arity {arity}")))
}

fn binary<'a, 'c>(
    id: &str,
    op: &'a str,
    m: &'a LinearMap,
    f: impl Fn(&dyn Fn(&Vector, &Vector) -> Vector, &dyn Fn(&Vector) -> Vector, &Vector, &Vector) -> (Vector, Vector)
        + Send
        + Sync
        + 'a,
) -> Eqn<'a, 'c> {
    Equation::new(id, 2, move |c: &Ctx, a: &[Arg]| {
        let p = |x: &Vector, y: &Vector| c.ap(op, &[x, y]);
        let phi = |x: &Vector| m.apply(x);
        f(&p, &phi, &a[0].v, &a[1].v)
    })
}

fn ternary<'a, 'c>(
    id: &str,
    op: &'a str,
    m: &'a LinearMap,
    f: impl Fn(
            &dyn Fn(&Vector, &Vector, &Vector) -> Vector,
            &dyn Fn(&Vector) -> Vector,
            &Vector,
            &Vector,
            &Vector,
        ) -> (Vector, Vector)
        + Send
        + Sync
        + 'a,
) -> Eqn<'a, 'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let p = |x: &Vector, y: &Vector, z: &Vector| c.ap(op, &[x, y, z]);
        let phi = |x: &Vector| m.apply(x);
        f(&p, &phi, &a[0].v, &a[1].v, &a[2].v)
    })
}

/// Equations of `pred` for the map `m` acting on operation `op`.
pub fn predicate_equations<'a, 'c>(
    pred: Predicate,
    op: &'a str,
    m: &'a LinearMap,
    weight: Option<&'a Scalar>,
    morphism_ops: &'a [String],
) -> Vec<Eqn<'a, 'c>> {
    use Predicate::*;
    let lam = || weight.cloned().expect("weight checked by caller");
    match pred {
        Averaging => vec![
            binary("averaging_left", op, m, |p, f, x, y| (f(&p(&f(x), y)), p(&f(x), &f(y)))),
            binary("averaging_right", op, m, |p, f, x, y| {
                (f(&p(x, &f(y))), p(&f(x), &f(y)))
            }),
        ],
        Centroid2 => vec![
            binary("centroid_left", op, m, |p, f, x, y| (f(&p(x, y)), p(&f(x), y))),
            binary("centroid_right", op, m, |p, f, x, y| (f(&p(x, y)), p(x, &f(y)))),
        ],
        Nijenhuis => vec![binary("nijenhuis", op, m, |p, f, x, y| {
            let inner = &(&p(&f(x), y) + &p(x, &f(y))) - &f(&p(x, y));
            (p(&f(x), &f(y)), f(&inner))
        })],
        Reynolds2 => vec![binary("reynolds", op, m, |p, f, x, y| {
            let fxfy = p(&f(x), &f(y));
            let inner = &(&p(&f(x), y) + &p(x, &f(y))) - &fxfy;
            (fxfy, f(&inner))
        })],
        RotaBaxter2 => {
            let l = lam();
            vec![binary("rota_baxter", op, m, move |p, f, x, y| {
                let mut inner = &p(&f(x), y) + &p(x, &f(y));
                inner.axpy(&l, &p(x, y));
                (p(&f(x), &f(y)), f(&inner))
            })]
        }
        Centroid3 => vec![
            ternary("centroid_1", op, m, |p, f, x, y, z| (f(&p(x, y, z)), p(&f(x), y, z))),
            ternary("centroid_2", op, m, |p, f, x, y, z| (f(&p(x, y, z)), p(x, &f(y), z))),
            ternary("centroid_3", op, m, |p, f, x, y, z| (f(&p(x, y, z)), p(x, y, &f(z)))),
        ],
        Reynolds3 => vec![ternary("reynolds3", op, m, |p, f, x, y, z| {
            let (fx, fy, fz) = (f(x), f(y), f(z));
            let all = p(&fx, &fy, &fz);
            let mut inner = p(&fx, &fy, z);
            inner = &inner + &p(&fx, y, &fz);
            inner = &inner + &p(x, &fy, &fz);
            inner = &inner - &all;
            (all, f(&inner))
        })],
        RotaBaxter3 => {
            let l = lam();
            let l2 = &l * &l;
            vec![ternary("rota_baxter3", op, m, move |p, f, x, y, z| {
                let (fx, fy, fz) = (f(x), f(y), f(z));
                let mut inner = p(&fx, &fy, z);
                inner = &inner + &p(&fx, y, &fz);
                inner = &inner + &p(x, &fy, &fz);
                let mut one = p(&fx, y, z);
                one = &one + &p(x, &fy, z);
                one = &one + &p(x, y, &fz);
                inner.axpy(&l, &one);
                inner.axpy(&l2, &p(x, y, z));
                (p(&fx, &fy, &fz), f(&inner))
            })]
        }
        Morphism => morphism_ops
            .iter()
            .map(|name| {
                let name: &'a str = name.as_str();
                let arity = if name.ends_with('3') { 3 } else { 2 };
                Equation::new(format!("morphism:{name}"), arity, move |c: &Ctx, a: &[Arg]| {
                    let args: Vec<&Vector> = a.iter().map(|x| &x.v).collect();
                    let mapped: Vec<Vector> = a.iter().map(|x| m.apply(&x.v)).collect();
                    let refs: Vec<&Vector> = mapped.iter().collect();
                    (m.apply(&c.ap(name, &args)), c.ap(name, &refs))
                })
            })
            .collect(),
        InvolutionAntiauto => vec![
            Equation::new("involution", 1, move |_: &Ctx, a: &[Arg]| {
                (m.apply(&m.apply(&a[0].v)), a[0].v.clone())
            }),
            Equation::new("antiautomorphism", 2, move |c: &Ctx, a: &[Arg]| {
                let lhs = m.apply(&c.ap(op, &[&a[0].v, &a[1].v]));
                let rhs = c.ap(op, &[&m.apply(&a[1].v), &m.apply(&a[0].v)]);
                (lhs, sc(&c.eps(&a[0].d, &a[1].d), rhs))
            }),
        ],
    }
}

/// Operations a map must preserve to be a morphism of `obj`.
pub(crate) fn morphism_op_names(obj: &GradedAlgebraObject) -> Vec<String> {
    [
        "product2",
        "bracket2",
        "bracket3",
        "left",
        "middle",
        "right",
        "commutator3",
        "translator3",
    ]
    .iter()
    .filter(|n| obj.has_op(n))
    .map(|n| n.to_string())
    .collect()
}

/// Checks `pred` for the even map `m`, using the default operation of the predicate's arity.
pub fn check_operator(
    obj: &GradedAlgebraObject,
    m: &LinearMap,
    pred: Predicate,
    weight: Option<&Scalar>,
) -> Result<AxiomReport> {
    check_operator_with(obj, m, pred, weight, None, &CheckOptions::default())
}

/// As [`check_operator`] with an explicit operation name and options.
pub fn check_operator_with(
    obj: &GradedAlgebraObject,
    m: &LinearMap,
    pred: Predicate,
    weight: Option<&Scalar>,
    op: Option<&str>,
    opts: &CheckOptions,
) -> Result<AxiomReport> {
    require_square_even(obj, m)?;
    let weight = require_weight(pred, weight)?;
    let op_name: String = match (pred, op) {
        (_, Some(o)) => {
            obj.op(o)?;
            o.to_string()
        }
        (Predicate::InvolutionAntiauto, None) => {
            obj.op("product2")?;
            "product2".to_string()
        }
        (Predicate::Morphism, None) => String::new(),
        (_, None) => default_op(obj, pred.arity())?.to_string(),
    };
    let morphism_ops = if pred == Predicate::Morphism {
        match op {
            Some(o) => vec![o.to_string()],
            None => morphism_op_names(obj),
        }
    } else {
        vec![]
    };
    let weight = weight.map(|w| obj.field.coerce(&w)).transpose()?;
    let ctx = Ctx::new(obj, opts.variant);
    let eqs = predicate_equations(pred, &op_name, m, weight.as_ref(), &morphism_ops);
    Ok(run(&ctx, &eqs, &obj.basis, obj.labels(), opts))
}

struct Pair<'a> {
    src: &'a GradedAlgebraObject,
    tgt: &'a GradedAlgebraObject,
}

/// Checks `α(op(x, ...)) = op'(αx, ...)` for each listed operation, where
/// `α` maps `src` into `tgt`.
pub fn check_morphism(
    src: &GradedAlgebraObject,
    tgt: &GradedAlgebraObject,
    alpha: &LinearMap,
    ops: &[&str],
) -> Result<AxiomReport> {
    if alpha.rows() != tgt.dim() || alpha.cols() != src.dim() {
        return Err(Error::input("morphism matrix has the wrong shape"));
    }
    if !alpha.is_even(&tgt.basis, &src.basis) {
        return Err(Error::input("morphism is not even"));
    }
    for &o in ops {
        src.op(o)?;
        tgt.op(o)?;
    }
    let ctx = Pair { src, tgt };
    let eqs: Vec<Equation<Pair>> = ops
        .iter()
        .map(|&name| {
            let arity = src.op(name).map(|o| o.arity()).unwrap_or(2);
            Equation::new(format!("morphism:{name}"), arity, move |c: &Pair, a: &[Arg]| {
                let args: Vec<&Vector> = a.iter().map(|x| &x.v).collect();
                let mapped: Vec<Vector> = a.iter().map(|x| alpha.apply(&x.v)).collect();
                let refs: Vec<&Vector> = mapped.iter().collect();
                (
                    alpha.apply(&c.src.op(name).unwrap().apply(&args)),
                    c.tgt.op(name).unwrap().apply(&refs),
                )
            })
        })
        .collect();
    Ok(run(&ctx, &eqs, &src.basis, tgt.labels(), &CheckOptions::default()))
}
