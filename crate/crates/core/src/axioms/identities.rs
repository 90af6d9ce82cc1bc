//! Defining equations of each identity class.

use crate::graded::Vector;

use super::engine::{dsum, sc, Arg, Ctx, Equation};
use super::{Identity, Variant};

pub type Eqn<'c> = Equation<'static, Ctx<'c>>;

fn p2(c: &Ctx, op: &str, a: &Vector, b: &Vector) -> Vector {
    c.ap(op, &[a, b])
}

fn p3(c: &Ctx, op: &str, a: &Vector, b: &Vector, d: &Vector) -> Vector {
    c.ap(op, &[a, b, d])
}

/// `(x op y) op z = x op (y op z)`.
pub(crate) fn assoc<'c>(id: &str, op: &'static str) -> Eqn<'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        (p2(c, op, &p2(c, op, x, y), z), p2(c, op, x, &p2(c, op, y, z)))
    })
}

/// `(x o1 y) o2 z = x o3 (y o4 z)`.
fn mixed_assoc<'c>(id: &str, o1: &'static str, o2: &'static str, o3: &'static str, o4: &'static str) -> Eqn<'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        (p2(c, o2, &p2(c, o1, x, y), z), p2(c, o3, x, &p2(c, o4, y, z)))
    })
}

/// `x·y = ε(x,y) y·x`.
fn eps_comm<'c>(op: &'static str) -> Eqn<'c> {
    Equation::new("eps_comm", 2, move |c: &Ctx, a: &[Arg]| {
        let e = c.eps(&a[0].d, &a[1].d);
        (p2(c, op, &a[0].v, &a[1].v), sc(&e, p2(c, op, &a[1].v, &a[0].v)))
    })
}

/// `[x,y] = -ε(x,y)[y,x]`.
fn eps_skew<'c>(op: &'static str) -> Eqn<'c> {
    Equation::new("eps_skew", 2, move |c: &Ctx, a: &[Arg]| {
        let e = -c.eps(&a[0].d, &a[1].d);
        (p2(c, op, &a[0].v, &a[1].v), sc(&e, p2(c, op, &a[1].v, &a[0].v)))
    })
}

/// `[[x,y],z] = [x,[y,z]] + ε(y,z)[[x,z],y]`.
pub(crate) fn leibniz<'c>(id: &str, op: &'static str) -> Eqn<'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        let lhs = p2(c, op, &p2(c, op, x, y), z);
        let mut rhs = p2(c, op, x, &p2(c, op, y, z));
        rhs.axpy(&c.eps(&a[1].d, &a[2].d), &p2(c, op, &p2(c, op, x, z), y));
        (lhs, rhs)
    })
}

/// `[x·y,z] = x·[y,z] + ε(y,z)[x,z]·y`.
pub(crate) fn right_leibniz_compat<'c>(id: &str) -> Eqn<'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        let lhs = p2(c, "bracket2", &p2(c, "product2", x, y), z);
        let mut rhs = p2(c, "product2", x, &p2(c, "bracket2", y, z));
        rhs.axpy(
            &c.eps(&a[1].d, &a[2].d),
            &p2(c, "product2", &p2(c, "bracket2", x, z), y),
        );
        (lhs, rhs)
    })
}

/// `[[x,y,z],t,u] = [x,y,[z,t,u]] + ε(z,t+u)[x,[y,t,u],z] + ε(y+z,t+u)[[x,t,u],y,z]`.
pub(crate) fn ternary_leibniz<'c>(id: &str, op: &'static str) -> Eqn<'c> {
    Equation::new(id, 5, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z, t, u) = (&a[0].v, &a[1].v, &a[2].v, &a[3].v, &a[4].v);
        let tu = dsum(&[&a[3].d, &a[4].d]);
        let lhs = p3(c, op, &p3(c, op, x, y, z), t, u);
        let mut rhs = p3(c, op, x, y, &p3(c, op, z, t, u));
        rhs.axpy(&c.eps(&a[2].d, &tu), &p3(c, op, x, &p3(c, op, y, t, u), z));
        rhs.axpy(
            &c.eps(&dsum(&[&a[1].d, &a[2].d]), &tu),
            &p3(c, op, &p3(c, op, x, t, u), y, z),
        );
        (lhs, rhs)
    })
}

/// `[x·y,z,t] = x·[y,z,t] + ε(y,z+t)[x,z,t]·y`.
pub(crate) fn ternary_right_leibniz<'c>(id: &str) -> Eqn<'c> {
    Equation::new(id, 4, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z, t) = (&a[0].v, &a[1].v, &a[2].v, &a[3].v);
        let lhs = p3(c, "bracket3", &p2(c, "product2", x, y), z, t);
        let mut rhs = p2(c, "product2", x, &p3(c, "bracket3", y, z, t));
        rhs.axpy(
            &c.eps(&a[1].d, &dsum(&[&a[2].d, &a[3].d])),
            &p2(c, "product2", &p3(c, "bracket3", x, z, t), y),
        );
        (lhs, rhs)
    })
}

/// `[x,y,z] = -ε(x,y)[y,x,z]`.
fn skew12<'c>(id: &str, op: &'static str) -> Eqn<'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        (p3(c, op, x, y, z), sc(&-c.eps(&a[0].d, &a[1].d), p3(c, op, y, x, z)))
    })
}

/// `[x,y,z] = -ε(y,z)[x,z,y]`.
fn skew23<'c>(id: &str, op: &'static str) -> Eqn<'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        (p3(c, op, x, y, z), sc(&-c.eps(&a[1].d, &a[2].d), p3(c, op, x, z, y)))
    })
}

/// `[x,y,z] = s ε(x,y)ε(x,z)ε(y,z)[z,y,x]` with `s = ±1`.
fn outer<'c>(id: &str, op: &'static str, negate: bool) -> Eqn<'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        let mut e = &(&c.eps(&a[0].d, &a[1].d) * &c.eps(&a[0].d, &a[2].d)) * &c.eps(&a[1].d, &a[2].d);
        if negate {
            e = -e;
        }
        (p3(c, op, x, y, z), sc(&e, p3(c, op, z, y, x)))
    })
}

/// `ε(z,x)[x,y,z] + ε(x,y)[y,z,x] + ε(y,z)[z,x,y] = 0`.
fn cyclic<'c>(id: &str, op: &'static str) -> Eqn<'c> {
    Equation::new(id, 3, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        let mut lhs = sc(&c.eps(&a[2].d, &a[0].d), p3(c, op, x, y, z));
        lhs.axpy(&c.eps(&a[0].d, &a[1].d), &p3(c, op, y, z, x));
        lhs.axpy(&c.eps(&a[1].d, &a[2].d), &p3(c, op, z, x, y));
        (lhs, Vector::zero())
    })
}

/// `[[x,y,z],t,u] = [x,y,[z,t,u]] - ε(z,t+u)ε(t,u)[x,[y,u,t],z] + ε(y+z,t+u)[[x,t,u],y,z]`.
fn jordan_triple<'c>(id: &str, op: &'static str) -> Eqn<'c> {
    Equation::new(id, 5, move |c: &Ctx, a: &[Arg]| {
        let (x, y, z, t, u) = (&a[0].v, &a[1].v, &a[2].v, &a[3].v, &a[4].v);
        let tu = dsum(&[&a[3].d, &a[4].d]);
        let lhs = p3(c, op, &p3(c, op, x, y, z), t, u);
        let mut rhs = p3(c, op, x, y, &p3(c, op, z, t, u));
        let e = -(&c.eps(&a[2].d, &tu) * &c.eps(&a[3].d, &a[4].d));
        rhs.axpy(&e, &p3(c, op, x, &p3(c, op, y, u, t), z));
        rhs.axpy(
            &c.eps(&dsum(&[&a[1].d, &a[2].d]), &tu),
            &p3(c, op, &p3(c, op, x, t, u), y, z),
        );
        (lhs, rhs)
    })
}

/// `(x·y)·z - x·(y·z) = (y·x)·z - y·(x·z)`.
fn left_symmetric<'c>() -> Eqn<'c> {
    Equation::new("left_symmetric", 3, |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        let p = "product2";
        let lhs = &p2(c, p, &p2(c, p, x, y), z) - &p2(c, p, x, &p2(c, p, y, z));
        let rhs = &p2(c, p, &p2(c, p, y, x), z) - &p2(c, p, y, &p2(c, p, x, z));
        (lhs, rhs)
    })
}

/// Polarized `<x,y,x> = [x,y,x]`: `<x,y,z> + <z,y,x> = [x,y,z] + [z,y,x]` for `deg x = deg z`.
fn comstrans_agree<'c>() -> Eqn<'c> {
    Equation::new("comstrans_agree", 3, |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        let lhs = &p3(c, "translator3", x, y, z) + &p3(c, "translator3", z, y, x);
        let rhs = &p3(c, "commutator3", x, y, z) + &p3(c, "commutator3", z, y, x);
        (lhs, rhs)
    })
    .with_filter(|a: &[Arg]| a[0].d == a[2].d)
}

/// Commutator skewness; the printed reading is skew in the last two slots,
/// the amended one in the first two.
fn comstrans_skew<'c>() -> Eqn<'c> {
    Equation::new("comstrans_skew", 3, |c: &Ctx, a: &[Arg]| {
        let (x, y, z) = (&a[0].v, &a[1].v, &a[2].v);
        let op = "commutator3";
        let rhs = match c.variant {
            Variant::Printed => sc(&-c.eps(&a[1].d, &a[2].d), p3(c, op, x, z, y)),
            Variant::Amended => sc(&-c.eps(&a[0].d, &a[1].d), p3(c, op, y, x, z)),
        };
        (p3(c, op, x, y, z), rhs)
    })
}

/// Operations an identity reads.
pub fn required_ops(id: Identity) -> &'static [&'static str] {
    use Identity::*;
    match id {
        Assoc | EpsComm | LeftSymmetric => &["product2"],
        EpsSkew2 | Leibniz2 | LieColor => &["bracket2"],
        RightLeibnizCompat | LeibnizPoisson => &["product2", "bracket2"],
        TernaryLeibniz | TernaryLie | Lts | Jts => &["bracket3"],
        TernaryRightLeibniz | TernaryLeibnizPoisson => &["product2", "bracket3"],
        Trialgebra => &["left", "middle", "right"],
        Dialgebra => &["left", "right"],
        Comstrans => &["commutator3", "translator3"],
        Action | Bimodule2 => &["bracket2"],
        Bimodule3 | Representation3 => &["bracket3"],
        Bimodule3Poisson => &["product2", "bracket3"],
    }
}

/// The equations of an algebra-level identity, in reporting order.
pub fn identity_equations<'c>(id: Identity, _dim: usize) -> Vec<Eqn<'c>> {
    use Identity::*;
    match id {
        Assoc => vec![assoc("assoc", "product2")],
        EpsComm => vec![eps_comm("product2")],
        EpsSkew2 => vec![eps_skew("bracket2")],
        Leibniz2 => vec![leibniz("leibniz", "bracket2")],
        LieColor => vec![leibniz("leibniz", "bracket2"), eps_skew("bracket2")],
        RightLeibnizCompat => vec![right_leibniz_compat("right_leibniz_compat")],
        LeibnizPoisson => vec![
            assoc("assoc", "product2"),
            leibniz("leibniz", "bracket2"),
            right_leibniz_compat("right_leibniz_compat"),
        ],
        TernaryLeibniz => vec![ternary_leibniz("ternary_leibniz", "bracket3")],
        TernaryLie => vec![
            ternary_leibniz("ternary_leibniz", "bracket3"),
            skew12("skew_12", "bracket3"),
            skew23("skew_23", "bracket3"),
            outer("skew_13", "bracket3", true),
        ],
        TernaryRightLeibniz => vec![ternary_right_leibniz("ternary_right_leibniz")],
        TernaryLeibnizPoisson => vec![
            assoc("assoc", "product2"),
            ternary_leibniz("ternary_leibniz", "bracket3"),
            ternary_right_leibniz("ternary_right_leibniz"),
        ],
        Lts => vec![
            ternary_leibniz("ternary_leibniz", "bracket3"),
            skew23("right_skew", "bracket3"),
            cyclic("ternary_jacobi", "bracket3"),
        ],
        Jts => vec![
            outer("outer_symmetry", "bracket3", false),
            jordan_triple("jordan_triple", "bracket3"),
        ],
        Trialgebra => vec![
            mixed_assoc("tri_1", "left", "left", "left", "right"),
            mixed_assoc("tri_2", "left", "left", "left", "middle"),
            mixed_assoc("tri_3", "right", "left", "right", "left"),
            mixed_assoc("tri_4", "left", "right", "right", "right"),
            mixed_assoc("tri_5", "middle", "right", "right", "right"),
            mixed_assoc("tri_6", "middle", "left", "middle", "left"),
            mixed_assoc("tri_7", "left", "middle", "middle", "right"),
            mixed_assoc("tri_8", "right", "middle", "right", "middle"),
            assoc("assoc_left", "left"),
            assoc("assoc_middle", "middle"),
            assoc("assoc_right", "right"),
        ],
        Dialgebra => vec![
            mixed_assoc("di_1", "left", "left", "left", "left"),
            mixed_assoc("di_2", "left", "left", "left", "right"),
            mixed_assoc("di_3", "right", "left", "right", "left"),
            mixed_assoc("di_4", "left", "right", "right", "right"),
            mixed_assoc("di_5", "right", "right", "right", "right"),
        ],
        LeftSymmetric => vec![left_symmetric()],
        Comstrans => vec![
            comstrans_agree(),
            comstrans_skew(),
            cyclic("translator_cyclic", "translator3"),
        ],
        Action | Bimodule2 | Bimodule3 | Bimodule3Poisson | Representation3 => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_algebra_identity_has_equations() {
        for &id in Identity::ALL {
            let eqs = identity_equations(id, 1);
            assert_eq!(eqs.is_empty(), id.is_module_kind(), "{id}");
        }
    }
}
