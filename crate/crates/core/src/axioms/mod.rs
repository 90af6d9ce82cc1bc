//! Identity and operator-predicate checking over homogeneous basis tuples.
//!
//! Every identity in the catalog is a conjunction of multilinear equations, so
//! checking basis tuples decides it for all homogeneous elements.

pub mod engine;
mod identities;
mod modules;
mod operators;

use std::fmt;

use crate::error::{Error, Result};
use crate::graded::{BimoduleObject, GradedAlgebraObject, LinearMap};
use crate::report::{AxiomReport, DEFAULT_WITNESS_CAP};
use crate::scalar::Scalar;

pub use engine::{spot_check as spot_check_equations, Arg, Ctx, Equation};
pub use identities::{identity_equations, required_ops};
pub use modules::{check_bimodule, check_representation};
pub use operators::{check_morphism, check_operator, check_operator_with, default_op, predicate_equations};

macro_rules! named_enum {
    ($(#[$m:meta])* $name:ident { $($variant:ident => $text:literal),* $(,)? }) => {
        $(#[$m])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $name { $($variant),* }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $($name::$variant => $text),* }
            }

            pub fn parse(s: &str) -> Result<Self> {
                match s {
                    $($text => Ok($name::$variant),)*
                    _ => Err(Error::input(format!(concat!("unknown ", stringify!($name), " {:?}"), s))),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}
pub(crate) use named_enum;

named_enum!(
    /// Identity classes an object can claim.
    Identity {
        Assoc => "ASSOC",
        EpsComm => "EPS_COMM",
        EpsSkew2 => "EPS_SKEW2",
        Leibniz2 => "LEIBNIZ2",
        LieColor => "LIE_COLOR",
        RightLeibnizCompat => "RIGHT_LEIBNIZ_COMPAT",
        LeibnizPoisson => "LEIBNIZ_POISSON",
        TernaryLeibniz => "TERNARY_LEIBNIZ",
        TernaryLie => "TERNARY_LIE",
        TernaryRightLeibniz => "TERNARY_RIGHT_LEIBNIZ",
        TernaryLeibnizPoisson => "TERNARY_LEIBNIZ_POISSON",
        Lts => "LTS",
        Jts => "JTS",
        Trialgebra => "TRIALGEBRA",
        Dialgebra => "DIALGEBRA",
        LeftSymmetric => "LEFT_SYMMETRIC",
        Comstrans => "COMSTRANS",
        Action => "ACTION",
        Bimodule2 => "BIMODULE2",
        Bimodule3 => "BIMODULE3",
        Bimodule3Poisson => "BIMODULE3_POISSON",
        Representation3 => "REPRESENTATION3",
    }
);

impl Identity {
    /// Identities about a module rather than a single algebra.
    pub fn is_module_kind(self) -> bool {
        matches!(
            self,
            Identity::Action
                | Identity::Bimodule2
                | Identity::Bimodule3
                | Identity::Bimodule3Poisson
                | Identity::Representation3
        )
    }
}

named_enum!(
    /// Which reading of a formula with a suspected misprint to use.
    Variant {
        Printed => "printed",
        Amended => "amended",
    }
);

#[allow(clippy::derivable_impls)]
impl Default for Variant {
    fn default() -> Self {
        Variant::Printed
    }
}

named_enum!(
    /// Conditions on an even map relative to an operation.
    Predicate {
        Averaging => "AVERAGING",
        Centroid2 => "CENTROID2",
        Nijenhuis => "NIJENHUIS",
        Reynolds2 => "REYNOLDS2",
        RotaBaxter2 => "ROTA_BAXTER2",
        Centroid3 => "CENTROID3",
        Reynolds3 => "REYNOLDS3",
        RotaBaxter3 => "ROTA_BAXTER3",
        Morphism => "MORPHISM",
        InvolutionAntiauto => "INVOLUTION_ANTIAUTO",
    }
);

impl Predicate {
    pub fn needs_weight(self) -> bool {
        matches!(self, Predicate::RotaBaxter2 | Predicate::RotaBaxter3)
    }

    pub fn arity(self) -> usize {
        match self {
            Predicate::Centroid3 | Predicate::Reynolds3 | Predicate::RotaBaxter3 => 3,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Maximum witnesses kept; `None` keeps all.
    pub cap: Option<usize>,
    pub variant: Variant,
    /// Stop evaluating after the first violation (counts stay complete).
    pub fail_fast: bool,
    pub parallel: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            cap: Some(DEFAULT_WITNESS_CAP),
            variant: Variant::Printed,
            fail_fast: false,
            parallel: true,
        }
    }
}

impl CheckOptions {
    pub fn variant(variant: Variant) -> Self {
        CheckOptions {
            variant,
            ..Default::default()
        }
    }

    pub fn sequential_fail_fast() -> Self {
        CheckOptions {
            cap: Some(1),
            fail_fast: true,
            parallel: false,
            ..Default::default()
        }
    }
}

/// Exhaustive check of `id` on `obj` with default options.
pub fn check_identity(obj: &GradedAlgebraObject, id: Identity) -> Result<AxiomReport> {
    check_identity_with(obj, id, &CheckOptions::default())
}

pub fn check_identity_with(obj: &GradedAlgebraObject, id: Identity, opts: &CheckOptions) -> Result<AxiomReport> {
    if id.is_module_kind() {
        return Err(Error::input(format!("{id} is checked on a bimodule or representation")));
    }
    let grading = obj.grading_check();
    if !grading.passed() {
        return Err(Error::input(format!(
            "object is not graded; first offending constant: {}",
            grading.render_tuple(&grading.witnesses[0].tuple)
        )));
    }
    for op in required_ops(id) {
        obj.op(op)?;
    }
    let ctx = Ctx::new(obj, opts.variant);
    let eqs = identity_equations(id, obj.dim());
    Ok(engine::run(&ctx, &eqs, &obj.basis, obj.labels(), opts))
}

/// Every claim of the object, under the object's own variant when it has one.
pub fn check_claims(obj: &GradedAlgebraObject) -> Result<Vec<(Identity, AxiomReport)>> {
    let opts = CheckOptions::variant(obj.variant.unwrap_or_default());
    obj.claims
        .iter()
        .map(|&id| Ok((id, check_identity_with(obj, id, &opts)?)))
        .collect()
}

/// Random homogeneous (non-basis) spot check of an identity.
pub fn spot_check(
    obj: &GradedAlgebraObject,
    id: Identity,
    variant: Variant,
    samples: usize,
    seed: u64,
) -> Result<AxiomReport> {
    use rand::SeedableRng;
    for op in required_ops(id) {
        obj.op(op)?;
    }
    let ctx = Ctx::new(obj, variant);
    let eqs = identity_equations(id, obj.dim());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    Ok(engine::spot_check(&ctx, &eqs, &obj.basis, obj.field, samples, &mut rng))
}

/// Checks a representation or bimodule claim on whichever object carries it.
pub fn check_module_identity(b: &BimoduleObject, id: Identity) -> Result<AxiomReport> {
    check_bimodule(b, id, &CheckOptions::default())
}

pub(crate) fn require_weight(pred: Predicate, weight: Option<&Scalar>) -> Result<Option<Scalar>> {
    match (pred.needs_weight(), weight) {
        (true, None) => Err(Error::input(format!("{pred} needs a weight"))),
        (true, Some(w)) => Ok(Some(w.clone())),
        (false, _) => Ok(None),
    }
}

pub(crate) fn require_square_even(obj: &GradedAlgebraObject, m: &LinearMap) -> Result<()> {
    if m.rows() != obj.dim() || m.cols() != obj.dim() {
        return Err(Error::input(format!(
            "map is {}x{}, object has dimension {}",
            m.rows(),
            m.cols(),
            obj.dim()
        )));
    }
    if !m.is_even(&obj.basis, &obj.basis) {
        return Err(Error::input("map is not even"));
    }
    Ok(())
}
