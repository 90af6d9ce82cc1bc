use crate::axioms::{check_morphism, Identity, Variant};
use crate::error::{Error, Result};
use crate::graded::{
    BimoduleObject, GradedAlgebraObject, LinearMap, MultilinearOp, RepKind, RepresentationObject, Vector,
};
use crate::grading::GroupElement;

use super::{derive_ternary_from_binary, require, require_bimodule, require_report, tabulate};

/// Prefix for module basis names built from an algebra basis.
pub(crate) const MODULE_PREFIX: &str = "m:";

/// Copies `op` onto a combined space: positions marked `M` and the output are shifted by `n`.
fn embed(op: &MultilinearOp, pattern: &str, n: usize) -> MultilinearOp {
    let is_m: Vec<bool> = pattern.chars().map(|c| c == 'M').collect();
    let mut out = MultilinearOp::algebra(op.arity());
    for (args, v) in op.constants() {
        let shifted: Vec<usize> = args
            .iter()
            .zip(&is_m)
            .map(|(&a, &m)| if m { a + n } else { a })
            .collect();
        out.add_image(&shifted, &v.reindex(|i| i + n));
    }
    out
}

fn module_basis_of(l: &GradedAlgebraObject) -> Result<crate::graded::GradedBasis> {
    l.basis.concat(
        &crate::graded::GradedBasis::empty(l.basis.group().clone()),
        (MODULE_PREFIX, ""),
    )
}

/// `L` as a module over itself: binary (`BIMODULE2`), ternary (`BIMODULE3`)
/// or ternary with the product acting too (`BIMODULE3_POISSON`).
pub fn adjoint_bimodule(l: &GradedAlgebraObject, kind: Identity) -> Result<BimoduleObject> {
    let n = l.dim();
    let mut b = BimoduleObject::new(l.clone(), module_basis_of(l)?);
    match kind {
        Identity::Bimodule2 => {
            require(l, Identity::Leibniz2, "input")?;
            let br = l.op("bracket2")?;
            b.actions.insert("left_act".into(), embed(br, "LM", n));
            b.actions.insert("right_act".into(), embed(br, "ML", n));
        }
        Identity::Bimodule3 | Identity::Bimodule3Poisson => {
            let br = l.op("bracket3")?;
            if kind == Identity::Bimodule3Poisson {
                require(l, Identity::TernaryLeibnizPoisson, "input")?;
                let p = l.op("product2")?;
                b.actions.insert("mod_prod_left".into(), embed(p, "LM", n));
                b.actions.insert("mod_prod_right".into(), embed(p, "ML", n));
            } else {
                require(l, Identity::TernaryLeibniz, "input")?;
            }
            b.actions.insert("act_LLM".into(), embed(br, "LLM", n));
            b.actions.insert("act_LML".into(), embed(br, "LML", n));
            b.actions.insert("act_MLL".into(), embed(br, "MLL", n));
        }
        other => return Err(Error::input(format!("{other} is not an adjoint module kind"))),
    }
    b.add_claim(kind);
    b.provenance.push(format!("adjoint_bimodule({kind})"));
    Ok(b)
}

/// `L ⊕ M` with `[M,M,·]`-type brackets zero.
pub fn semidirect3(b: &BimoduleObject) -> Result<GradedAlgebraObject> {
    let poisson = b.actions.contains_key("mod_prod_left") || b.actions.contains_key("mod_prod_right");
    let kind = if poisson {
        Identity::Bimodule3Poisson
    } else {
        Identity::Bimodule3
    };
    let base = if poisson {
        Identity::TernaryLeibnizPoisson
    } else {
        Identity::TernaryLeibniz
    };
    require(&b.algebra, base, "algebra")?;
    require_bimodule(b, kind)?;
    let combined = b.combined_object()?;
    let mut out = b.algebra.empty_like(combined.basis.clone());
    out.set_op("bracket3", combined.op("bracket3")?.clone());
    out.add_claim(Identity::TernaryLeibniz);
    if poisson {
        out.set_op("product2", combined.op("product2")?.clone());
        out.add_claim(Identity::TernaryLeibnizPoisson);
    }
    Ok(out.with_provenance("semidirect3"))
}

/// `M ⊕ N` over the same algebra; module names get `1.`/`2.` prefixes.
pub fn bimodule_direct_sum(a: &BimoduleObject, b: &BimoduleObject) -> Result<BimoduleObject> {
    if a.algebra != b.algebra {
        return Err(Error::input("modules are over different algebras"));
    }
    let (n, ka) = (a.algebra_dim(), a.module_dim());
    let module_basis = a.module_basis.concat(&b.module_basis, super::algebra::SUM_PREFIXES)?;
    let mut out = BimoduleObject::new(a.algebra.clone(), module_basis);
    let shift = |i: usize| if i >= n { i + ka } else { i };
    let names: std::collections::BTreeSet<&String> = a.actions.keys().chain(b.actions.keys()).collect();
    for name in names {
        let left = a.action_or_zero(name);
        let right = b.action_or_zero(name).reindex(shift, shift);
        out.actions.insert(name.clone(), left.plus(&right));
    }
    for id in &a.claims {
        if b.claims.contains(id) {
            require_bimodule(a, *id)?;
            require_bimodule(b, *id)?;
            out.add_claim(*id);
        }
    }
    out.provenance.push("bimodule_direct_sum".into());
    Ok(out)
}

/// `M ⊗ N` for two ternary modules over the same algebra:
/// `{x,y,m⊗n} = [x,y,m]⊗n + ε(x+y,m) m⊗[x,y,n]`,
/// `{x,m⊗n,y} = ε(n,y)[x,m,y]⊗n + ε(x,m) m⊗[x,n,y]`,
/// `{m⊗n,x,y} = ε(n,x+y)[m,x,y]⊗n + m⊗[n,x,y]`.
///
/// The printed form of the last rule has an ill-typed second term
/// `m⊗m⊗[n,x,y]`; the printed variant drops it.
pub fn bimodule_tensor(a: &BimoduleObject, b: &BimoduleObject, variant: Variant) -> Result<BimoduleObject> {
    if a.algebra != b.algebra {
        return Err(Error::input("modules are over different algebras"));
    }
    require(&a.algebra, Identity::TernaryLeibniz, "algebra")?;
    require_bimodule(a, Identity::Bimodule3)?;
    require_bimodule(b, Identity::Bimodule3)?;
    let l = &a.algebra;
    let (n, ka, kb) = (l.dim(), a.module_dim(), b.module_dim());
    let module_basis = a.module_basis.tensor(&b.module_basis)?;
    let eps = |g: &GroupElement, h: &GroupElement| l.bicharacter.eval(g, h);
    let mdeg = |i: usize| a.module_basis.degree(i);
    let ndeg = |j: usize| b.module_basis.degree(j);
    let ma = |name: &str, args: [usize; 3]| a.action_or_zero(name).apply_basis(&args).restrict(n..n + ka);
    let nb = |name: &str, args: [usize; 3]| b.action_or_zero(name).apply_basis(&args).restrict(n..n + kb);
    // (module vector of M) ⊗ (module vector of N), placed in the combined space
    let pair = |u: &Vector, v: &Vector| {
        let mut out = Vector::zero();
        for (i, x) in u.iter() {
            for (j, y) in v.iter() {
                out.add_term(n + i * kb + j, &(x * y));
            }
        }
        out
    };
    let unit = Vector::unit;
    let mut llm = MultilinearOp::algebra(3);
    let mut lml = MultilinearOp::algebra(3);
    let mut mll = MultilinearOp::algebra(3);
    for x in 0..n {
        for y in 0..n {
            let xy = l.basis.degree_sum(&[x, y]);
            for m in 0..ka {
                for k in 0..kb {
                    let t = n + m * kb + k;
                    // {x, y, m⊗k}
                    let mut v = pair(&ma("act_LLM", [x, y, n + m]), &unit(k));
                    v.axpy(&eps(&xy, mdeg(m)), &pair(&unit(m), &nb("act_LLM", [x, y, n + k])));
                    llm.add_image(&[x, y, t], &v);
                    // {x, m⊗k, y}
                    let mut v = pair(&ma("act_LML", [x, n + m, y]), &unit(k)).scaled(&eps(ndeg(k), l.degree(y)));
                    v.axpy(
                        &eps(l.degree(x), mdeg(m)),
                        &pair(&unit(m), &nb("act_LML", [x, n + k, y])),
                    );
                    lml.add_image(&[x, t, y], &v);
                    // {m⊗k, x, y}
                    let mut v = pair(&ma("act_MLL", [n + m, x, y]), &unit(k)).scaled(&eps(ndeg(k), &xy));
                    if variant == Variant::Amended {
                        v = &v + &pair(&unit(m), &nb("act_MLL", [n + k, x, y]));
                    }
                    mll.add_image(&[t, x, y], &v);
                }
            }
        }
    }
    let mut out = BimoduleObject::new(l.clone(), module_basis);
    out.actions.insert("act_LLM".into(), llm);
    out.actions.insert("act_LML".into(), lml);
    out.actions.insert("act_MLL".into(), mll);
    out.add_claim(Identity::Bimodule3);
    out.provenance.push(format!("bimodule_tensor({variant})"));
    Ok(out)
}

/// Ternary module over `[x,y,z] = [x,[y,z]]` from a binary module:
/// `[x,y,m] = x∗(y∗m)`, `[x,m,y] = x∗(m∗y)`, `[m,x,y] = m∗[x,y]`.
pub fn bimodule_from_binary(b: &BimoduleObject) -> Result<BimoduleObject> {
    require_bimodule(b, Identity::Bimodule2)?;
    let algebra = derive_ternary_from_binary(&b.algebra)?;
    let (left, right) = (b.action("left_act")?, b.action("right_act")?);
    let br = b.algebra.op("bracket2")?;
    let n = b.algebra_dim();
    let total = n + b.module_dim();
    let is_m = |i: usize| i >= n;
    let llm = tabulate(total, 3, |k| {
        if is_m(k[0]) || is_m(k[1]) || !is_m(k[2]) {
            return Vector::zero();
        }
        left.apply(&[&Vector::unit(k[0]), &left.apply_basis(&[k[1], k[2]])])
    });
    let lml = tabulate(total, 3, |k| {
        if is_m(k[0]) || !is_m(k[1]) || is_m(k[2]) {
            return Vector::zero();
        }
        left.apply(&[&Vector::unit(k[0]), &right.apply_basis(&[k[1], k[2]])])
    });
    let mll = tabulate(total, 3, |k| {
        if !is_m(k[0]) || is_m(k[1]) || is_m(k[2]) {
            return Vector::zero();
        }
        right.apply(&[&Vector::unit(k[0]), &br.apply_basis(&[k[1], k[2]])])
    });
    let mut out = BimoduleObject::new(algebra, b.module_basis.clone());
    out.actions.insert("act_LLM".into(), llm);
    out.actions.insert("act_LML".into(), lml);
    out.actions.insert("act_MLL".into(), mll);
    out.add_claim(Identity::Bimodule3);
    out.provenance = b.provenance.clone();
    out.provenance.push("bimodule_from_binary".into());
    Ok(out)
}

/// `L'` as a Poisson module over `L` through a morphism `α: L → L'`:
/// `x·m = α(x)·m`, `[x,y,m] = [αx,αy,m]` and so on.
pub fn pullback_bimodule(
    l: &GradedAlgebraObject,
    target: &GradedAlgebraObject,
    alpha: &LinearMap,
) -> Result<BimoduleObject> {
    super::same_grading(l, target)?;
    require(l, Identity::TernaryLeibnizPoisson, "source")?;
    require(target, Identity::TernaryLeibnizPoisson, "target")?;
    let report = check_morphism(l, target, alpha, &["product2", "bracket3"])?;
    require_report(report, || "map is not a morphism".into())?;
    let (n, k) = (l.dim(), target.dim());
    let (p, br) = (target.op("product2")?, target.op("bracket3")?);
    let al = |i: usize| alpha.column(i).clone();
    let m = |i: usize| Vector::unit(i - n);
    let lift = |v: Vector| v.reindex(|i| i + n);
    let total = n + k;
    let is_m = |i: usize| i >= n;
    let pat = |k: &[usize], want: &str| k.iter().zip(want.chars()).all(|(&i, c)| is_m(i) == (c == 'M'));
    let mut b = BimoduleObject::new(l.clone(), module_basis_of(target)?);
    let put = |b: &mut BimoduleObject, name: &str, op: MultilinearOp| {
        b.actions.insert(name.into(), op);
    };
    put(
        &mut b,
        "act_LLM",
        tabulate(total, 3, |a| {
            if !pat(a, "LLM") {
                return Vector::zero();
            }
            lift(br.apply(&[&al(a[0]), &al(a[1]), &m(a[2])]))
        }),
    );
    put(
        &mut b,
        "act_LML",
        tabulate(total, 3, |a| {
            if !pat(a, "LML") {
                return Vector::zero();
            }
            lift(br.apply(&[&al(a[0]), &m(a[1]), &al(a[2])]))
        }),
    );
    put(
        &mut b,
        "act_MLL",
        tabulate(total, 3, |a| {
            if !pat(a, "MLL") {
                return Vector::zero();
            }
            lift(br.apply(&[&m(a[0]), &al(a[1]), &al(a[2])]))
        }),
    );
    put(
        &mut b,
        "mod_prod_left",
        tabulate(total, 2, |a| {
            if !pat(a, "LM") {
                return Vector::zero();
            }
            lift(p.apply(&[&al(a[0]), &m(a[1])]))
        }),
    );
    put(
        &mut b,
        "mod_prod_right",
        tabulate(total, 2, |a| {
            if !pat(a, "ML") {
                return Vector::zero();
            }
            lift(p.apply(&[&m(a[0]), &al(a[1])]))
        }),
    );
    b.add_claim(Identity::Bimodule3Poisson);
    b.provenance.push("pullback_bimodule".into());
    Ok(b)
}

/// `λ_{x,y}m = [x,y,m]`, `μ_{x,y}m = [x,m,y]`, `ρ_{x,y}m = [m,x,y]`.
pub fn bimodule_to_representation(b: &BimoduleObject) -> Result<RepresentationObject> {
    let (n, k) = (b.algebra_dim(), b.module_dim());
    let mut r = RepresentationObject::new(b.algebra.clone(), b.module_basis.clone());
    for (kind, name) in [
        (RepKind::Lambda, "act_LLM"),
        (RepKind::Mu, "act_LML"),
        (RepKind::Rho, "act_MLL"),
    ] {
        let act = b.action_or_zero(name);
        for x in 0..n {
            for y in 0..n {
                let cols: Vec<Vector> = (0..k)
                    .map(|m| {
                        let args = match kind {
                            RepKind::Lambda => [x, y, n + m],
                            RepKind::Mu => [x, n + m, y],
                            RepKind::Rho => [n + m, x, y],
                        };
                        act.apply_basis(&args).restrict(n..n + k)
                    })
                    .collect();
                let map = LinearMap::from_columns(k, cols)?;
                if !map.is_zero() {
                    r.family_mut(kind).insert((x, y), map);
                }
            }
        }
    }
    Ok(r)
}

/// Inverse of [`bimodule_to_representation`].
pub fn representation_to_bimodule(r: &RepresentationObject) -> Result<BimoduleObject> {
    let n = r.algebra.dim();
    let mut b = BimoduleObject::new(r.algebra.clone(), r.module_basis.clone());
    for (kind, name) in [
        (RepKind::Lambda, "act_LLM"),
        (RepKind::Mu, "act_LML"),
        (RepKind::Rho, "act_MLL"),
    ] {
        let mut op = MultilinearOp::algebra(3);
        for (&(x, y), map) in r.family(kind) {
            for c in 0..map.cols() {
                let img = map.column(c).reindex(|i| i + n);
                let args = match kind {
                    RepKind::Lambda => [x, y, n + c],
                    RepKind::Mu => [x, n + c, y],
                    RepKind::Rho => [n + c, x, y],
                };
                op.add_image(&args, &img);
            }
        }
        b.actions.insert(name.into(), op);
    }
    b.add_claim(Identity::Bimodule3);
    b.add_claim(Identity::Representation3);
    b.provenance.push("representation_to_bimodule".into());
    Ok(b)
}
