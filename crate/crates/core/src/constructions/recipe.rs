//! Named constructions with string parameters, as used by the command line and the audit.

use std::collections::BTreeMap;
use std::fmt;

use crate::axioms::{check_morphism, named_enum, Identity, Variant};
use crate::error::{Error, Result};
use crate::graded::{GradedAlgebraObject, LinearMap};
use crate::io::Document;
use crate::report::AxiomReport;
use crate::scalar::Scalar;

use super::*;

named_enum!(
    /// Construction identifiers.
    Recipe {
        DeriveTernary => "derive_ternary",
        Contract => "contract",
        TwistBinary => "twist_binary",
        TwistTernary => "twist_ternary",
        DirectSum => "direct_sum",
        SemidirectSum => "semidirect_sum",
        TensorSquareTernary => "tensor_square_ternary",
        TensorAssocTernary => "tensor_assoc_ternary",
        TensorSquarePoisson3 => "tensor_square_poisson3",
        FromTrialgebra => "from_trialgebra",
        RbTrialgebra => "rb_trialgebra",
        FromAssociative => "from_associative",
        FromDialgebra => "from_dialgebra",
        PoissonToTernary => "poisson_to_ternary",
        FromLie => "from_lie",
        JtsToLts => "jts_to_lts",
        ComstransFromForm => "comstrans_from_form",
        OppositeProduct => "opposite_product",
        Adjoint => "adjoint",
        Semidirect3 => "semidirect3",
        BimoduleDirectSum => "bimodule_direct_sum",
        BimoduleTensor => "bimodule_tensor",
        BimoduleFromBinary => "bimodule_from_binary",
        Pullback => "pullback",
        RepConvert => "rep_convert",
    }
);

impl Recipe {
    /// Number of input documents.
    pub fn inputs(self) -> usize {
        use Recipe::*;
        match self {
            DirectSum | SemidirectSum | TensorAssocTernary | BimoduleDirectSum | BimoduleTensor | Pullback => 2,
            _ => 1,
        }
    }

    /// Parameter keys the recipe reads.
    pub fn params(self) -> &'static [&'static str] {
        use Recipe::*;
        match self {
            Contract => &["xi"],
            TwistBinary | TwistTernary => &["kind", "map", "weight"],
            DirectSum => &["kind"],
            FromTrialgebra => &["target", "variant"],
            RbTrialgebra => &["map", "weight", "target"],
            FromAssociative => &["target", "map", "variant"],
            PoissonToTernary => &["recipe"],
            FromLie => &["target"],
            Adjoint => &["kind"],
            BimoduleTensor => &["variant"],
            Pullback => &["map"],
            ComstransFromForm => &["variant"],
            _ => &[],
        }
    }
}

/// `key=value` parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub BTreeMap<String, String>);

impl Params {
    pub fn parse(items: &[String]) -> Result<Self> {
        let mut out = BTreeMap::new();
        for item in items {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::input(format!("parameter {item:?} is not of the form key=value")))?;
            if out.insert(k.to_string(), v.to_string()).is_some() {
                return Err(Error::input(format!("parameter {k:?} given twice")));
            }
        }
        Ok(Params(out))
    }

    pub fn with(mut self, k: &str, v: impl fmt::Display) -> Self {
        self.0.insert(k.into(), v.to_string());
        self
    }

    pub fn get(&self, k: &str) -> Option<&str> {
        self.0.get(k).map(String::as_str)
    }

    fn required(&self, k: &str) -> Result<&str> {
        self.get(k)
            .ok_or_else(|| Error::input(format!("missing parameter {k:?}")))
    }

    fn variant(&self) -> Result<Variant> {
        self.get("variant").map_or(Ok(Variant::Printed), Variant::parse)
    }

    fn weight(&self) -> Result<Option<Scalar>> {
        self.get("weight").map(|w| w.parse::<Scalar>()).transpose()
    }
}

/// Output of a recipe with the verification reports of its claims.
#[derive(Clone, Debug)]
pub struct Built {
    pub output: Document,
    /// `(claim, report)`; twists with a morphism clause add a `MORPHISM` row.
    pub reports: Vec<(String, AxiomReport)>,
}

impl Built {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|(_, r)| r.passed())
    }
}

fn map_param<'a>(obj: &'a GradedAlgebraObject, params: &Params) -> Result<&'a LinearMap> {
    obj.map(params.required("map")?)
}

fn parse_twist(kind: &str, weight: Option<Scalar>) -> Result<Twist> {
    Ok(match kind {
        "averaging" => Twist::Averaging,
        "centroid" => Twist::Centroid,
        "reynolds" => Twist::Reynolds,
        "rota_baxter" => Twist::RotaBaxter(weight.ok_or_else(|| Error::input("rota_baxter needs weight"))?),
        "nijenhuis" => Twist::Nijenhuis,
        _ => return Err(Error::input(format!("unknown binary twist {kind:?}"))),
    })
}

fn parse_ternary_twist(kind: &str, weight: Option<Scalar>) -> Result<TernaryTwist> {
    Ok(match kind {
        "centroid_a" => TernaryTwist::CentroidA,
        "centroid_b" => TernaryTwist::CentroidB,
        "centroid_c" => TernaryTwist::CentroidC,
        "reynolds3" => TernaryTwist::Reynolds3,
        "rota_baxter3" => TernaryTwist::RotaBaxter3(weight.ok_or_else(|| Error::input("rota_baxter3 needs weight"))?),
        _ => return Err(Error::input(format!("unknown ternary twist {kind:?}"))),
    })
}

fn parse_sum_kind(kind: &str) -> Result<SumKind> {
    Ok(match kind {
        "binary" => SumKind::Binary,
        "ternary" => SumKind::Ternary,
        "poisson" => SumKind::TernaryPoisson,
        _ => return Err(Error::input(format!("unknown direct sum kind {kind:?}"))),
    })
}

fn parse_module_kind(kind: &str) -> Result<Identity> {
    let id = Identity::parse(&kind.to_ascii_uppercase())?;
    match id {
        Identity::Bimodule2 | Identity::Bimodule3 | Identity::Bimodule3Poisson => Ok(id),
        _ => Err(Error::input(format!("{id} is not an adjoint module kind"))),
    }
}

fn build(recipe: Recipe, inputs: &[Document], params: &Params) -> Result<Document> {
    use Recipe::*;
    let a = inputs[0].algebra();
    let out = match recipe {
        DeriveTernary => Document::Algebra(derive_ternary_from_binary(a)?),
        Contract => {
            let name = params.required("xi")?;
            let xi = a
                .basis
                .index_of(name)
                .ok_or_else(|| Error::input(format!("no basis vector {name:?}")))?;
            Document::Algebra(binary_from_ternary_at(a, xi)?)
        }
        TwistBinary => {
            let kind = parse_twist(params.required("kind")?, params.weight()?)?;
            Document::Algebra(twist_binary(a, map_param(a, params)?, &kind)?)
        }
        TwistTernary => {
            let kind = parse_ternary_twist(params.required("kind")?, params.weight()?)?;
            Document::Algebra(ternary_twist(a, map_param(a, params)?, &kind)?)
        }
        DirectSum => {
            let kind = parse_sum_kind(params.required("kind")?)?;
            Document::Algebra(direct_sum(a, inputs[1].algebra(), kind)?)
        }
        SemidirectSum => Document::Algebra(semidirect_sum(a, inputs[1].algebra(), inputs[0].bimodule()?)?),
        TensorSquareTernary => Document::Algebra(tensor_square_ternary(a)?),
        TensorAssocTernary => Document::Algebra(tensor_assoc_ternary(a, inputs[1].algebra())?),
        TensorSquarePoisson3 => Document::Algebra(tensor_square_poisson3(a)?),
        FromTrialgebra => {
            let target = match params.required("target")? {
                "leibniz_poisson" => TrialgebraTarget::LeibnizPoisson,
                "ternary" => TrialgebraTarget::TernaryLeibniz,
                "star" => TrialgebraTarget::StarAssoc,
                t => return Err(Error::input(format!("unknown trialgebra target {t:?}"))),
            };
            Document::Algebra(from_trialgebra(a, target, params.variant()?)?)
        }
        RbTrialgebra => {
            let weight = params.weight()?.unwrap_or_else(Scalar::zero);
            let target = Identity::parse(&params.get("target").unwrap_or("LEFT_SYMMETRIC").to_ascii_uppercase())?;
            Document::Algebra(rb_trialgebra_derived(a, map_param(a, params)?, &weight, target)?)
        }
        FromAssociative => {
            let target = match params.required("target")? {
                "commutator_lie" => AssocTarget::CommutatorLie,
                "ternary_commutator" => AssocTarget::TernaryCommutator,
                "lts" => AssocTarget::Lts,
                "jts_plain" => AssocTarget::JtsPlain,
                "jts_involution" => AssocTarget::JtsInvolution(map_param(a, params)?.clone()),
                "comstrans" => AssocTarget::Comstrans(params.variant()?),
                t => return Err(Error::input(format!("unknown associative target {t:?}"))),
            };
            Document::Algebra(from_associative(a, &target)?)
        }
        FromDialgebra => Document::Algebra(from_dialgebra(a)?),
        PoissonToTernary => {
            let r = match params.get("recipe").unwrap_or("nested") {
                "nested" => PoissonRecipe::NestedBracket,
                "bracket_of_product" => PoissonRecipe::BracketOfProduct,
                r => return Err(Error::input(format!("unknown Poisson recipe {r:?}"))),
            };
            Document::Algebra(poisson_to_ternary(a, r)?)
        }
        FromLie => {
            let t = match params.get("target").unwrap_or("lts") {
                "lts" => LieTarget::Lts,
                "comstrans" => LieTarget::Comstrans,
                t => return Err(Error::input(format!("unknown Lie target {t:?}"))),
            };
            Document::Algebra(from_lie(a, t)?)
        }
        JtsToLts => Document::Algebra(jts_to_lts(a)?),
        ComstransFromForm => {
            let mut out = comstrans_from_bilinear_form(a.field, &a.basis, &a.bicharacter, a.op("form2")?)?;
            out.variant = Some(params.variant()?);
            Document::Algebra(out)
        }
        OppositeProduct => Document::Algebra(opposite_product(a)?),
        Adjoint => Document::Bimodule(adjoint_bimodule(
            a,
            parse_module_kind(params.get("kind").unwrap_or("bimodule3"))?,
        )?),
        Semidirect3 => Document::Algebra(semidirect3(inputs[0].bimodule()?)?),
        BimoduleDirectSum => Document::Bimodule(bimodule_direct_sum(inputs[0].bimodule()?, inputs[1].bimodule()?)?),
        BimoduleTensor => Document::Bimodule(bimodule_tensor(
            inputs[0].bimodule()?,
            inputs[1].bimodule()?,
            params.variant()?,
        )?),
        BimoduleFromBinary => Document::Bimodule(bimodule_from_binary(inputs[0].bimodule()?)?),
        Pullback => Document::Bimodule(pullback_bimodule(a, inputs[1].algebra(), map_param(a, params)?)?),
        RepConvert => {
            let r = bimodule_to_representation(inputs[0].bimodule()?)?;
            Document::Bimodule(representation_to_bimodule(&r)?)
        }
    };
    Ok(out)
}

/// Runs a recipe and, when `verify` is set, re-checks every claim of the output.
pub fn run_recipe(recipe: Recipe, inputs: &[Document], params: &Params, verify: bool) -> Result<Built> {
    if inputs.len() != recipe.inputs() {
        return Err(Error::input(format!(
            "{recipe} takes {} input(s), got {}",
            recipe.inputs(),
            inputs.len()
        )));
    }
    for key in params.0.keys() {
        if !recipe.params().contains(&key.as_str()) {
            return Err(Error::input(format!("{recipe} has no parameter {key:?}")));
        }
    }
    let output = build(recipe, inputs, params)?;
    let mut reports = vec![];
    if verify {
        match &output {
            Document::Algebra(obj) => {
                for (id, r) in super::verify(obj)? {
                    reports.push((id.to_string(), r));
                }
            }
            Document::Bimodule(b) => {
                for (id, r) in super::verify_bimodule(b)? {
                    reports.push((id.to_string(), r));
                }
            }
        }
        if recipe == Recipe::TwistBinary {
            let a = inputs[0].algebra();
            let kind = parse_twist(params.required("kind")?, params.weight()?)?;
            if kind.has_morphism_clause() {
                let twisted = match &output {
                    Document::Algebra(t) => t,
                    Document::Bimodule(_) => unreachable!("twists produce algebras"),
                };
                reports.push((
                    "MORPHISM".into(),
                    check_morphism(twisted, a, map_param(a, params)?, &["bracket2"])?,
                ));
            }
        }
    }
    Ok(Built { output, reports })
}
