//! Bimodule, action and representation checks.
//!
//! A bimodule `M` over `L` is checked as the combined space `L ⊕ M` whose
//! operations are extended by the action tensors; the module axioms are then
//! the algebra identities restricted to tuples with the right pattern of
//! algebra (`L`) and module (`M`) slots.

use crate::error::{Error, Result};
use crate::graded::{BimoduleObject, GradedBasis, RepKind, RepresentationObject, Vector};
use crate::report::AxiomReport;

use super::engine::{dsum, run, Arg, Ctx, Equation};
use super::identities::{assoc, leibniz, ternary_leibniz, ternary_right_leibniz, Eqn};
use super::{CheckOptions, Identity};

/// All `L`/`M` patterns of length `len`, in lexicographic order with `L < M`.
fn patterns(len: usize) -> Vec<String> {
    (0..1usize << len)
        .map(|bits| {
            (0..len)
                .map(|k| if bits >> (len - 1 - k) & 1 == 1 { 'M' } else { 'L' })
                .collect()
        })
        .collect()
}

fn one_module_slot(len: usize) -> Vec<String> {
    patterns(len)
        .into_iter()
        .filter(|p| p.matches('M').count() == 1)
        .collect()
}

fn slots(pattern: &str, n: usize, k: usize) -> Vec<Vec<usize>> {
    pattern
        .chars()
        .map(|ch| {
            if ch == 'L' {
                (0..n).collect()
            } else {
                (n..n + k).collect()
            }
        })
        .collect()
}

fn required_actions(kind: Identity) -> Result<&'static [&'static str]> {
    Ok(match kind {
        Identity::Bimodule2 | Identity::Action => &["left_act", "right_act"],
        Identity::Bimodule3 => &["act_MLL", "act_LML", "act_LLM"],
        Identity::Bimodule3Poisson => &["act_MLL", "act_LML", "act_LLM", "mod_prod_left", "mod_prod_right"],
        other => return Err(Error::input(format!("{other} is not a bimodule kind"))),
    })
}

fn bimodule_equations<'c>(kind: Identity, n: usize, k: usize) -> Vec<Eqn<'c>> {
    let mut eqs = vec![];
    let restrict = |e: Eqn<'c>, prefix: &str, p: &str| e.with_slots(format!("{prefix}_{p}"), slots(p, n, k));
    match kind {
        Identity::Bimodule2 => {
            for p in one_module_slot(3) {
                eqs.push(restrict(leibniz("", "bracket2"), "bimodule2", &p));
            }
        }
        Identity::Action => {
            for p in patterns(3) {
                if p.contains('L') && p.contains('M') {
                    eqs.push(restrict(leibniz("", "bracket2"), "action", &p));
                }
            }
        }
        Identity::Bimodule3 | Identity::Bimodule3Poisson => {
            for p in one_module_slot(5) {
                eqs.push(restrict(ternary_leibniz("", "bracket3"), "bimodule3", &p));
            }
            if kind == Identity::Bimodule3Poisson {
                for p in one_module_slot(4) {
                    eqs.push(restrict(ternary_right_leibniz(""), "poisson_compat", &p));
                }
                for p in one_module_slot(3) {
                    eqs.push(restrict(assoc("", "product2"), "assoc_module", &p));
                }
            }
        }
        _ => {}
    }
    eqs
}

/// Checks the module axioms of `kind` on the mixed tuples of `L ⊕ M`.
pub fn check_bimodule(b: &BimoduleObject, kind: Identity, opts: &CheckOptions) -> Result<AxiomReport> {
    for name in required_actions(kind)? {
        b.action(name)?;
    }
    if kind == Identity::Bimodule3Poisson {
        b.algebra.op("product2")?;
    }
    let grading = b.grading_check()?;
    if !grading.passed() {
        return Err(Error::input(format!(
            "action tensors are not graded; first offending constant: {}",
            grading.render_tuple(&grading.witnesses[0].tuple)
        )));
    }
    let combined = b.combined_object()?;
    let ctx = Ctx::new(&combined, opts.variant);
    let eqs = bimodule_equations(kind, b.algebra_dim(), b.module_dim());
    Ok(run(&ctx, &eqs, &combined.basis, combined.labels(), opts))
}

struct RepCtx<'a> {
    r: &'a RepresentationObject,
    n: usize,
    k: usize,
}

impl RepCtx<'_> {
    fn act(&self, kind: RepKind, x: &Vector, y: &Vector, m: &Vector) -> Vector {
        self.r.apply(kind, x, y, m)
    }

    fn br(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.r
            .algebra
            .ops
            .get("bracket3")
            .expect("bracket3 checked")
            .apply(&[x, y, z])
    }

    fn eps(&self, a: &crate::grading::GroupElement, b: &crate::grading::GroupElement) -> crate::scalar::Scalar {
        self.r.algebra.bicharacter.eval(a, b)
    }
}

type RepEqn<'c> = Equation<'static, RepCtx<'c>>;

/// Wraps a module-valued formula: the module argument and the result are
/// moved between combined and module coordinates.
fn rep_eq<'c>(
    id: &str,
    f: impl Fn(&RepCtx, &[Arg], &Vector) -> (Vector, Vector) + Send + Sync + 'static,
) -> RepEqn<'c> {
    Equation::new(id, 5, move |c: &RepCtx, a: &[Arg]| {
        let m = a[4].v.restrict(c.n..c.n + c.k);
        let (l, r) = f(c, a, &m);
        (l.reindex(|i| i + c.n), r.reindex(|i| i + c.n))
    })
}

fn representation_equations<'c>() -> Vec<RepEqn<'c>> {
    use RepKind::{Lambda, Mu, Rho};
    vec![
        // λ_{[x,y,z],t} = λ_{x,y}λ_{z,t} + ε(z,t+m)μ_{x,z}λ_{y,t} + ε(y+z,t+m)ρ_{y,z}λ_{x,t}
        rep_eq("rep_lambda", |c, a, m| {
            let (x, y, z, t) = (&a[0].v, &a[1].v, &a[2].v, &a[3].v);
            let tm = dsum(&[&a[3].d, &a[4].d]);
            let lhs = c.act(Lambda, &c.br(x, y, z), t, m);
            let mut rhs = c.act(Lambda, x, y, &c.act(Lambda, z, t, m));
            rhs.axpy(&c.eps(&a[2].d, &tm), &c.act(Mu, x, z, &c.act(Lambda, y, t, m)));
            rhs.axpy(
                &c.eps(&dsum(&[&a[1].d, &a[2].d]), &tm),
                &c.act(Rho, y, z, &c.act(Lambda, x, t, m)),
            );
            (lhs, rhs)
        }),
        // μ_{[x,y,z],t} = λ_{x,y}μ_{z,t} + ε(z,m+t)μ_{x,z}μ_{y,t} + ε(y+z,m+t)ρ_{y,z}μ_{x,t}
        rep_eq("rep_mu", |c, a, m| {
            let (x, y, z, t) = (&a[0].v, &a[1].v, &a[2].v, &a[3].v);
            let mt = dsum(&[&a[4].d, &a[3].d]);
            let lhs = c.act(Mu, &c.br(x, y, z), t, m);
            let mut rhs = c.act(Lambda, x, y, &c.act(Mu, z, t, m));
            rhs.axpy(&c.eps(&a[2].d, &mt), &c.act(Mu, x, z, &c.act(Mu, y, t, m)));
            rhs.axpy(
                &c.eps(&dsum(&[&a[1].d, &a[2].d]), &mt),
                &c.act(Rho, y, z, &c.act(Mu, x, t, m)),
            );
            (lhs, rhs)
        }),
        // ρ_{z,t}λ_{x,y} = λ_{x,y}ρ_{z,t} + ε(m,z+t)λ_{x,[y,z,t]} + ε(y+m,z+t)λ_{[x,z,t],y}
        rep_eq("rep_rho_lambda", |c, a, m| {
            let (x, y, z, t) = (&a[0].v, &a[1].v, &a[2].v, &a[3].v);
            let zt = dsum(&[&a[2].d, &a[3].d]);
            let lhs = c.act(Rho, z, t, &c.act(Lambda, x, y, m));
            let mut rhs = c.act(Lambda, x, y, &c.act(Rho, z, t, m));
            rhs.axpy(&c.eps(&a[4].d, &zt), &c.act(Lambda, x, &c.br(y, z, t), m));
            rhs.axpy(
                &c.eps(&dsum(&[&a[1].d, &a[4].d]), &zt),
                &c.act(Lambda, &c.br(x, z, t), y, m),
            );
            (lhs, rhs)
        }),
        // ρ_{z,t}μ_{x,y} = μ_{x,[y,z,t]} + ε(y,z+t)μ_{x,y}ρ_{z,t} + ε(y+m,z+t)μ_{[x,z,t],y}
        rep_eq("rep_rho_mu", |c, a, m| {
            let (x, y, z, t) = (&a[0].v, &a[1].v, &a[2].v, &a[3].v);
            let zt = dsum(&[&a[2].d, &a[3].d]);
            let lhs = c.act(Rho, z, t, &c.act(Mu, x, y, m));
            let mut rhs = c.act(Mu, x, &c.br(y, z, t), m);
            rhs.axpy(&c.eps(&a[1].d, &zt), &c.act(Mu, x, y, &c.act(Rho, z, t, m)));
            rhs.axpy(
                &c.eps(&dsum(&[&a[1].d, &a[4].d]), &zt),
                &c.act(Mu, &c.br(x, z, t), y, m),
            );
            (lhs, rhs)
        }),
        // ρ_{z,t}ρ_{x,y} = ρ_{x,[y,z,t]} + ε(y,z+t)ρ_{[x,z,t],y} + ε(x+y,z+t)ρ_{x,y}ρ_{z,t}
        rep_eq("rep_rho_rho", |c, a, m| {
            let (x, y, z, t) = (&a[0].v, &a[1].v, &a[2].v, &a[3].v);
            let zt = dsum(&[&a[2].d, &a[3].d]);
            let lhs = c.act(Rho, z, t, &c.act(Rho, x, y, m));
            let mut rhs = c.act(Rho, x, &c.br(y, z, t), m);
            rhs.axpy(&c.eps(&a[1].d, &zt), &c.act(Rho, &c.br(x, z, t), y, m));
            rhs.axpy(
                &c.eps(&dsum(&[&a[0].d, &a[1].d]), &zt),
                &c.act(Rho, x, y, &c.act(Rho, z, t, m)),
            );
            (lhs, rhs)
        }),
    ]
}

/// The five representation equations over algebra 4-tuples and module basis vectors.
pub fn check_representation(r: &RepresentationObject, opts: &CheckOptions) -> Result<AxiomReport> {
    r.algebra.op("bracket3")?;
    let grading = r.grading_check()?;
    if !grading.passed() {
        return Err(Error::input("representation maps do not shift degrees correctly"));
    }
    let n = r.algebra.dim();
    let k = r.module_basis.len();
    let basis: GradedBasis = r.algebra.basis.concat(&r.module_basis, ("", ""))?;
    let ctx = RepCtx { r, n, k };
    let mut dom: Vec<Vec<usize>> = vec![(0..n).collect(); 4];
    dom.push((n..n + k).collect());
    let eqs: Vec<RepEqn> = representation_equations()
        .into_iter()
        .map(|e| {
            let id = e.id.clone();
            e.with_slots(id, dom.clone())
        })
        .collect();
    Ok(run(&ctx, &eqs, &basis, basis.names(), opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_enumeration() {
        assert_eq!(one_module_slot(3), vec!["LLM", "LML", "MLL"]);
        assert_eq!(patterns(2), vec!["LL", "LM", "ML", "MM"]);
    }
}
