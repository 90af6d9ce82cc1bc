use crate::axioms::Identity;
use crate::error::{Error, Result};
use crate::graded::{GradedAlgebraObject, Vector};
use crate::grading::GroupElement;

use super::{require, same_grading, tabulate};

/// Index of `x ⊗ y` in a left-major pair basis.
fn pair(i: usize, j: usize, n2: usize) -> usize {
    i * n2 + j
}

/// `Σ a_i b_j (e_i ⊗ e_j)` in the pair basis.
fn tensor(a: &Vector, b: &Vector, n2: usize) -> Vector {
    let mut out = Vector::zero();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            out.add_term(pair(i, j, n2), &(x * y));
        }
    }
    out
}

/// `[x⊗y, x'⊗y'] := x⊗[y,x',y'] + ε(y,x'+y')[x,x',y']⊗y` on `L ⊗ L`.
pub fn tensor_square_ternary(l: &GradedAlgebraObject) -> Result<GradedAlgebraObject> {
    let t = l.op("bracket3")?;
    require(l, Identity::TernaryLeibniz, "input")?;
    let n = l.dim();
    let basis = l.basis.tensor(&l.basis)?;
    let b = tabulate(n * n, 2, |k| {
        let (x, y, x2, y2) = (k[0] / n, k[0] % n, k[1] / n, k[1] % n);
        let mut v = tensor(&Vector::unit(x), &t.apply_basis(&[y, x2, y2]), n);
        let e = l.bicharacter.eval(l.degree(y), &l.basis.degree_sum(&[x2, y2]));
        v.axpy(&e, &tensor(&t.apply_basis(&[x, x2, y2]), &Vector::unit(y), n));
        v
    });
    Ok(l.empty_like(basis)
        .with_op("bracket2", b)
        .claim(Identity::Leibniz2)
        .with_provenance("tensor_square_ternary"))
}

/// `{a⊗x, b⊗y, c⊗z} = ε(x,b+c)ε(y,c) abc ⊗ [x,y,z]` on `A ⊗ L`.
pub fn tensor_assoc_ternary(a: &GradedAlgebraObject, l: &GradedAlgebraObject) -> Result<GradedAlgebraObject> {
    same_grading(a, l)?;
    let p = a.op("product2")?;
    let t = l.op("bracket3")?;
    require(a, Identity::Assoc, "commutative factor")?;
    require(a, Identity::EpsComm, "commutative factor")?;
    require(l, Identity::TernaryLeibniz, "ternary factor")?;
    let (na, nl) = (a.dim(), l.dim());
    let basis = a.basis.tensor(&l.basis)?;
    let eps = |g: &GroupElement, h: &GroupElement| l.bicharacter.eval(g, h);
    let op = tabulate(na * nl, 3, |k| {
        let (ai, xi) = (k[0] / nl, k[0] % nl);
        let (bi, yi) = (k[1] / nl, k[1] % nl);
        let (ci, zi) = (k[2] / nl, k[2] % nl);
        let abc = p.apply(&[&p.apply_basis(&[ai, bi]), &Vector::unit(ci)]);
        if abc.is_zero() {
            return Vector::zero();
        }
        let xyz = t.apply_basis(&[xi, yi, zi]);
        let sign = &eps(l.degree(xi), &a.basis.degree_sum(&[bi, ci])) * &eps(l.degree(yi), a.degree(ci));
        tensor(&abc, &xyz, nl).scaled(&sign)
    });
    Ok(a.empty_like(basis)
        .with_op("bracket3", op)
        .claim(Identity::TernaryLeibniz)
        .with_provenance("tensor_assoc_ternary"))
}

/// Binary Leibniz-Poisson structure on `P ⊗ P` for a ternary Leibniz-Poisson `P`:
/// `(x⊗y)·(x'⊗y') := ε(y,x')(x·x')⊗(y·y')` and the bracket of [`tensor_square_ternary`].
pub fn tensor_square_poisson3(p: &GradedAlgebraObject) -> Result<GradedAlgebraObject> {
    let prod = p.op("product2")?;
    p.op("bracket3")?;
    require(p, Identity::TernaryLeibnizPoisson, "input")?;
    let n = p.dim();
    let mut ternary = p.clone();
    ternary.ops.remove("product2");
    let bracket = tensor_square_ternary(&ternary)?;
    let product = tabulate(n * n, 2, |k| {
        let (x, y, x2, y2) = (k[0] / n, k[0] % n, k[1] / n, k[1] % n);
        let e = p.eps(y, x2);
        tensor(&prod.apply_basis(&[x, x2]), &prod.apply_basis(&[y, y2]), n).scaled(&e)
    });
    if bracket.dim() != n * n {
        return Err(Error::input("pair basis has the wrong size"));
    }
    let mut out = bracket;
    out.claims.clear();
    out.provenance = vec!["tensor_square_poisson3".into()];
    out.set_op("product2", product);
    Ok(out.claim(Identity::LeibnizPoisson))
}
