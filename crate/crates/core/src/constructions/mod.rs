//! Constructions turning validated objects into new ones.
//!
//! Every construction checks its hypotheses first and returns
//! [`Error::Precondition`] with the failing report when one does not hold.
//! Outputs carry the identity they are expected to satisfy as a claim;
//! [`verify`] re-checks those claims independently.

mod algebra;
mod bimodule;
mod recipe;
mod tensor;

pub use algebra::{
    binary_from_ternary_at, comstrans_from_bilinear_form, derive_ternary_from_binary, direct_sum, from_associative,
    from_dialgebra, from_lie, from_trialgebra, jts_to_lts, opposite_product, poisson_to_ternary, rb_trialgebra_derived,
    semidirect_sum, ternary_twist, twist_binary, AssocTarget, LieTarget, PoissonRecipe, SumKind, TernaryTwist,
    TrialgebraTarget, Twist,
};
pub use bimodule::{
    adjoint_bimodule, bimodule_direct_sum, bimodule_from_binary, bimodule_tensor, bimodule_to_representation,
    pullback_bimodule, representation_to_bimodule, semidirect3,
};
pub use recipe::{run_recipe, Built, Params, Recipe};
pub use tensor::{tensor_assoc_ternary, tensor_square_poisson3, tensor_square_ternary};

use crate::axioms::{
    check_bimodule, check_claims, check_identity_with, check_operator_with, check_representation, CheckOptions,
    Identity, Predicate, Variant,
};
use crate::error::{Error, Result};
use crate::graded::{BimoduleObject, GradedAlgebraObject, LinearMap, MultilinearOp, RepresentationObject, Vector};
use crate::report::AxiomReport;
use crate::scalar::Scalar;

/// Fails with a precondition error unless `obj` satisfies `id`.
pub(crate) fn require(obj: &GradedAlgebraObject, id: Identity, what: &str) -> Result<()> {
    let report = check_identity_with(obj, id, &CheckOptions::default())?;
    require_report(report, || format!("{what} does not satisfy {id}"))
}

pub(crate) fn require_report(report: AxiomReport, context: impl FnOnce() -> String) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(context(), report))
    }
}

pub(crate) fn require_operator(
    obj: &GradedAlgebraObject,
    m: &LinearMap,
    pred: Predicate,
    weight: Option<&Scalar>,
    op: Option<&str>,
) -> Result<()> {
    let report = check_operator_with(obj, m, pred, weight, op, &CheckOptions::default())?;
    require_report(report, || format!("map is not {pred}"))
}

pub(crate) fn require_bimodule(b: &BimoduleObject, kind: Identity) -> Result<()> {
    let report = check_bimodule(b, kind, &CheckOptions::default())?;
    require_report(report, || format!("module does not satisfy {kind}"))
}

pub(crate) fn same_grading(a: &GradedAlgebraObject, b: &GradedAlgebraObject) -> Result<()> {
    if a.field != b.field {
        return Err(Error::input(format!("fields differ: {} vs {}", a.field, b.field)));
    }
    if a.bicharacter.group() != b.bicharacter.group() || a.bicharacter.table() != b.bicharacter.table() {
        return Err(Error::input("objects use different bicharacters"));
    }
    Ok(())
}

/// Builds an operation of the given arity on `n` basis vectors from its values on basis tuples.
pub(crate) fn tabulate(n: usize, arity: usize, f: impl Fn(&[usize]) -> Vector) -> MultilinearOp {
    let mut op = MultilinearOp::algebra(arity);
    let mut idx = vec![0usize; arity];
    if n == 0 {
        return op;
    }
    loop {
        let v = f(&idx);
        if !v.is_zero() {
            op.set_image(&idx, v);
        }
        let mut k = arity;
        loop {
            if k == 0 {
                return op;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Re-checks every claim of a constructed algebra under its own variant.
pub fn verify(obj: &GradedAlgebraObject) -> Result<Vec<(Identity, AxiomReport)>> {
    check_claims(obj)
}

/// Re-checks every claim of a constructed bimodule.
pub fn verify_bimodule(b: &BimoduleObject) -> Result<Vec<(Identity, AxiomReport)>> {
    b.claims
        .iter()
        .map(|&id| {
            let report = if id == Identity::Representation3 {
                check_representation(&bimodule_to_representation(b)?, &CheckOptions::default())?
            } else {
                check_bimodule(b, id, &CheckOptions::default())?
            };
            Ok((id, report))
        })
        .collect()
}

/// Re-checks a representation against the representation equations.
pub fn verify_representation(r: &RepresentationObject) -> Result<AxiomReport> {
    check_representation(r, &CheckOptions::default())
}

pub(crate) fn variant_note(v: Variant) -> &'static str {
    v.as_str()
}
