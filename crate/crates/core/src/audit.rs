//! Runs every construction on inputs drawn from a corpus and re-verifies the
//! claimed identity of each output.
//!
//! Rows whose construction has a printed and an amended form are run once
//! per variant and flagged as ledger rows. Operators needed by the twists are
//! found by exhaustive search over `GF(p)`.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::analysis::{search_operators, SearchConfig};
use crate::axioms::{Identity, Predicate, Variant};
use crate::constructions::{
    adjoint_bimodule, derive_ternary_from_binary, from_associative, poisson_to_ternary, run_recipe, AssocTarget,
    Params, PoissonRecipe, Recipe,
};
use crate::corpus::{dialgebra_of, CorpusEntry};
use crate::error::Error;
use crate::graded::{GradedAlgebraObject, GradedBasis, LinearMap, MultilinearOp};
use crate::grading::{Bicharacter, Builtin, GradingGroup};
use crate::io::Document;
use crate::report::AxiomReport;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug)]
pub struct AuditOptions {
    /// Record wall-clock time per row in the text rendering.
    pub timing: bool,
    /// Field of the operator searches.
    pub search_prime: u64,
    /// Largest operator search space per row.
    pub search_budget: u128,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            timing: false,
            search_prime: 3,
            search_budget: 6561,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowVerdict {
    Pass,
    Fail,
    /// Inputs did not meet the construction's hypotheses.
    Skipped,
    /// The construction rejected its inputs as malformed.
    Error,
}

impl RowVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RowVerdict::Pass => "pass",
            RowVerdict::Fail => "fail",
            RowVerdict::Skipped => "skipped",
            RowVerdict::Error => "error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AuditRow {
    pub theorem: String,
    pub instance: String,
    pub variant: Option<Variant>,
    /// Part of a printed/amended pair.
    pub ledger: bool,
    pub verdict: RowVerdict,
    /// `(claim, report)` for every claim of the output.
    pub checks: Vec<(String, AxiomReport)>,
    pub note: Option<String>,
    pub elapsed: Option<Duration>,
}

impl AuditRow {
    pub fn witness_count(&self) -> usize {
        self.checks.iter().map(|(_, r)| r.witnesses.len()).sum()
    }
}

#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub rows: Vec<AuditRow>,
}

impl AuditReport {
    pub fn count(&self, v: RowVerdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == v).count()
    }

    pub fn witness_count(&self) -> usize {
        self.rows.iter().map(AuditRow::witness_count).sum()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let variant = r.variant.map(|v| format!(" [{v}]")).unwrap_or_default();
            let _ = write!(s, "{}{variant} on {}: {}", r.theorem, r.instance, r.verdict.as_str());
            if let Some(t) = r.elapsed {
                let _ = write!(s, " ({} ms)", t.as_millis());
            }
            s.push('\n');
            if let Some(n) = &r.note {
                let _ = writeln!(s, "  note: {n}");
            }
            for (claim, rep) in &r.checks {
                for (k, line) in rep.to_string().lines().enumerate() {
                    if k == 0 {
                        let _ = writeln!(s, "  {claim}: {line}");
                    } else {
                        let _ = writeln!(s, "  {line}");
                    }
                }
            }
        }
        let _ = writeln!(s, "{}", self.summary_line());
        s
    }

    pub fn summary_line(&self) -> String {
        format!(
            "rows {}: pass {}, fail {}, skipped {}, error {}; witnesses {}",
            self.rows.len(),
            self.count(RowVerdict::Pass),
            self.count(RowVerdict::Fail),
            self.count(RowVerdict::Skipped),
            self.count(RowVerdict::Error),
            self.witness_count()
        )
    }

    /// JSON rendering; never contains timings.
    pub fn to_machine(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let checks: Vec<Value> = r
                    .checks
                    .iter()
                    .map(|(c, rep)| {
                        let mut v = rep.to_json();
                        v["claim"] = json!(c);
                        v
                    })
                    .collect();
                json!({
                    "theorem": r.theorem,
                    "instance": r.instance,
                    "variant": r.variant.map(|v| v.as_str()),
                    "ledger": r.ledger,
                    "verdict": r.verdict.as_str(),
                    "note": r.note,
                    "checks": checks,
                })
            })
            .collect();
        let summary = json!({
            "rows": self.rows.len(),
            "pass": self.count(RowVerdict::Pass),
            "fail": self.count(RowVerdict::Fail),
            "skipped": self.count(RowVerdict::Skipped),
            "error": self.count(RowVerdict::Error),
            "witnesses": self.witness_count(),
        });
        let mut s =
            serde_json::to_string_pretty(&json!({"rows": rows, "summary": summary})).expect("json values serialize");
        s.push('\n');
        s
    }
}

struct Plan {
    recipe: Recipe,
    inputs: Vec<Document>,
    params: Params,
    note: Option<String>,
}

enum Prep {
    Ready(Plan),
    Skip(String),
}

type Prepare<'a> = Box<dyn Fn() -> Prep + Send + Sync + 'a>;

struct Job<'a> {
    theorem: String,
    instance: String,
    variant: Option<Variant>,
    prepare: Prepare<'a>,
}

fn ready(recipe: Recipe, inputs: Vec<Document>, params: Params) -> Prep {
    Prep::Ready(Plan {
        recipe,
        inputs,
        params,
        note: None,
    })
}

fn alg(o: &GradedAlgebraObject) -> Document {
    Document::Algebra(o.clone())
}

fn claims(o: &GradedAlgebraObject, id: Identity) -> bool {
    o.claims.contains(&id)
}

fn same_grading(a: &GradedAlgebraObject, b: &GradedAlgebraObject) -> bool {
    a.basis.group() == b.basis.group() && a.bicharacter == b.bicharacter && a.field == b.field
}

fn is_scalar_map(m: &LinearMap) -> bool {
    let d = m.entry(0, 0);
    m.entries().iter().all(|(r, c, x)| r == c && *x == d)
}

/// A map satisfying the predicate over `GF(p)`, preferring maps that are not
/// multiples of the identity, with the object moved to `GF(p)`.
fn find_operator(
    obj: &GradedAlgebraObject,
    pred: Predicate,
    weight: Option<&Scalar>,
    injective: bool,
    opts: &AuditOptions,
) -> Result<(GradedAlgebraObject, LinearMap), String> {
    let mut cfg = SearchConfig::new(opts.search_prime, pred);
    cfg.weight = weight.cloned();
    cfg.budget = opts.search_budget;
    let found = search_operators(obj, &cfg).map_err(|e| e.to_string())?;
    let usable: Vec<&LinearMap> = found
        .maps
        .iter()
        .filter(|m| !m.is_zero() && (!injective || m.is_injective()))
        .collect();
    let pick = usable
        .iter()
        .find(|m| !is_scalar_map(m))
        .or_else(|| usable.first())
        .ok_or_else(|| format!("no usable {pred} operator among {} found", found.count))?;
    let field = Field::Prime(opts.search_prime);
    let moved = if obj.field == field {
        obj.clone()
    } else {
        obj.to_field(field).map_err(|e| e.to_string())?
    };
    Ok((moved, (*pick).clone()))
}

fn operator_job<'a>(
    recipe: Recipe,
    kind: &'static str,
    obj: &'a GradedAlgebraObject,
    pred: Predicate,
    weight: Option<Scalar>,
    opts: &'a AuditOptions,
) -> Prepare<'a> {
    Box::new(move || {
        let injective = kind == "averaging";
        match find_operator(obj, pred, weight.as_ref(), injective, opts) {
            Err(why) => Prep::Skip(why),
            Ok((mut moved, m)) => {
                let note = format!("operator {}", render_map(&m));
                moved.maps.insert("op".into(), m);
                let mut params = Params::default().with("kind", kind).with("map", "op");
                if let Some(w) = &weight {
                    params = params.with("weight", w);
                }
                Prep::Ready(Plan {
                    recipe,
                    inputs: vec![alg(&moved)],
                    params,
                    note: Some(note),
                })
            }
        }
    })
}

fn render_map(m: &LinearMap) -> String {
    let entries: Vec<String> = m.entries().iter().map(|(r, c, x)| format!("({r},{c})={x}")).collect();
    format!("{{{}}}", entries.join(", "))
}

/// Instances used only by the audit: ε-symmetric bilinear forms.
fn form_instances() -> Vec<(String, GradedAlgebraObject)> {
    let one = Scalar::one();
    let trivial = GradingGroup::trivial();
    let basis = GradedBasis::from_degrees(&trivial, &[("e1", &[]), ("e2", &[])]).expect("valid basis");
    let mut f = MultilinearOp::form(2);
    f.add_scalar_constant(&[0, 0], &one);
    f.add_scalar_constant(&[1, 1], &one);
    let plain = GradedAlgebraObject::new(Field::Rationals, basis, Bicharacter::trivial(trivial)).with_op("form2", f);

    let z2 = GradingGroup::z2();
    let basis = GradedBasis::from_degrees(&z2, &[("e1", &[0]), ("e2", &[1]), ("e3", &[1])]).expect("valid basis");
    let mut f = MultilinearOp::form(2);
    f.add_scalar_constant(&[0, 0], &one);
    f.add_scalar_constant(&[1, 2], &one);
    f.add_scalar_constant(&[2, 1], &-one.clone());
    let bc = Bicharacter::builtin(Builtin::Z2, &z2).expect("Z2 builtin");
    let sup = GradedAlgebraObject::new(Field::Rationals, basis, bc).with_op("form2", f);
    vec![("form/standard_2".into(), plain), ("form/super_1_2".into(), sup)]
}

fn trivially_graded(o: &GradedAlgebraObject) -> bool {
    (0..o.dim()).all(|i| (0..o.dim()).all(|j| o.eps(i, j).is_one()))
}

/// Left multiplication by basis vector `e` of the product `product2`.
fn left_mult(o: &GradedAlgebraObject, op: &str, e: usize) -> LinearMap {
    let p = o.op(op).expect("operation present");
    let n = o.dim();
    LinearMap::from_columns(n, (0..n).map(|j| p.apply_basis(&[e, j])).collect()).expect("square map")
}

fn push<'a>(jobs: &mut Vec<Job<'a>>, theorem: String, instance: &str, variant: Option<Variant>, prepare: Prepare<'a>) {
    jobs.push(Job {
        theorem,
        instance: instance.to_string(),
        variant,
        prepare,
    })
}

fn run_job(job: &Job, opts: &AuditOptions) -> AuditRow {
    let start = Instant::now();
    let mut row = AuditRow {
        theorem: job.theorem.clone(),
        instance: job.instance.clone(),
        variant: job.variant,
        ledger: false,
        verdict: RowVerdict::Skipped,
        checks: vec![],
        note: None,
        elapsed: None,
    };
    match (job.prepare)() {
        Prep::Skip(why) => row.note = Some(why),
        Prep::Ready(plan) => {
            row.note = plan.note;
            match run_recipe(plan.recipe, &plan.inputs, &plan.params, true) {
                Ok(built) => {
                    row.verdict = if built.passed() {
                        RowVerdict::Pass
                    } else {
                        RowVerdict::Fail
                    };
                    row.checks = built.reports;
                }
                Err(e @ Error::Precondition { .. }) => {
                    row.note = Some(match row.note {
                        Some(n) => format!("{n}; {e}"),
                        None => e.to_string(),
                    });
                }
                Err(e) => {
                    row.verdict = RowVerdict::Error;
                    row.note = Some(e.to_string());
                }
            }
        }
    }
    if opts.timing {
        row.elapsed = Some(start.elapsed());
    }
    row
}

/// Theorems run in both variants.
const LEDGER: [&str; 4] = [
    "from_trialgebra(leibniz_poisson)",
    "from_associative(comstrans)",
    "bimodule_tensor",
    "comstrans_from_form",
];

pub fn run_audit(corpus: &[CorpusEntry], opts: &AuditOptions) -> AuditReport {
    let find = |pred: fn(&GradedAlgebraObject) -> bool| -> Vec<(String, GradedAlgebraObject)> {
        corpus
            .iter()
            .filter(|e| pred(&e.object))
            .map(|e| (e.id.clone(), e.object.clone()))
            .collect()
    };
    let leibniz = find(|o| claims(o, Identity::Leibniz2) && o.has_op("bracket2"));
    let lie = find(|o| claims(o, Identity::LieColor));
    let assoc = find(|o| claims(o, Identity::Assoc) && o.has_op("product2") && !o.has_op("bracket2"));
    let trialgebras = find(|o| claims(o, Identity::Trialgebra));
    let poisson = find(|o| claims(o, Identity::LeibnizPoisson));
    let mut ternary = find(|o| claims(o, Identity::TernaryLeibniz) && o.has_op("bracket3"));
    for (id, o) in &leibniz {
        if let Ok(t) = derive_ternary_from_binary(o) {
            ternary.push((format!("{id}+ternary"), t));
        }
    }
    let tlp: Vec<(String, GradedAlgebraObject)> = poisson
        .iter()
        .filter_map(|(id, o)| {
            poisson_to_ternary(o, PoissonRecipe::NestedBracket)
                .ok()
                .map(|t| (format!("{id}+nested"), t))
        })
        .collect();
    let jts: Vec<(String, GradedAlgebraObject)> = assoc
        .iter()
        .flat_map(|(id, o)| {
            let mut v = vec![];
            if let Ok(j) = from_associative(o, &AssocTarget::JtsPlain) {
                v.push((format!("{id}+jts_plain"), j));
            }
            if let Ok(theta) = o.map("theta") {
                if let Ok(j) = from_associative(o, &AssocTarget::JtsInvolution(theta.clone())) {
                    v.push((format!("{id}+jts_involution"), j));
                }
            }
            v
        })
        .collect();
    let forms = form_instances();

    let mut jobs: Vec<Job> = vec![];
    // these borrow the pools for the lifetime of `jobs`
    let (leibniz, lie, assoc, trialgebras, poisson, ternary, tlp, jts, forms) = (
        &leibniz,
        &lie,
        &assoc,
        &trialgebras,
        &poisson,
        &ternary,
        &tlp,
        &jts,
        &forms,
    );

    for (id, o) in leibniz {
        push(
            &mut jobs,
            "derive_ternary".into(),
            id,
            None,
            Box::new(move || ready(Recipe::DeriveTernary, vec![alg(o)], Params::default())),
        );
    }
    for (id, o) in ternary {
        for xi in 0..o.dim() {
            if !o.degree(xi).is_zero() {
                continue;
            }
            let name = o.basis.name(xi).to_string();
            push(
                &mut jobs,
                "contract".into(),
                &format!("{id}@{name}"),
                None,
                Box::new(move || ready(Recipe::Contract, vec![alg(o)], Params::default().with("xi", &name))),
            );
        }
    }
    let binary_twists: [(&'static str, Predicate, Option<Scalar>); 5] = [
        ("averaging", Predicate::Averaging, None),
        ("centroid", Predicate::Centroid2, None),
        ("reynolds", Predicate::Reynolds2, None),
        ("rota_baxter", Predicate::RotaBaxter2, Some(Scalar::one())),
        ("nijenhuis", Predicate::Nijenhuis, None),
    ];
    for (id, o) in leibniz {
        for (kind, pred, w) in &binary_twists {
            push(
                &mut jobs,
                format!("twist_binary({kind})"),
                id,
                None,
                operator_job(Recipe::TwistBinary, kind, o, *pred, w.clone(), opts),
            );
        }
    }
    let ternary_twists: [(&'static str, Predicate, Option<Scalar>); 5] = [
        ("centroid_a", Predicate::Centroid3, None),
        ("centroid_b", Predicate::Centroid3, None),
        ("centroid_c", Predicate::Centroid3, None),
        ("reynolds3", Predicate::Reynolds3, None),
        ("rota_baxter3", Predicate::RotaBaxter3, Some(Scalar::one())),
    ];
    for (id, o) in ternary {
        for (kind, pred, w) in &ternary_twists {
            push(
                &mut jobs,
                format!("twist_ternary({kind})"),
                id,
                None,
                operator_job(Recipe::TwistTernary, kind, o, *pred, w.clone(), opts),
            );
        }
    }
    let sums: [(&str, &Vec<(String, GradedAlgebraObject)>); 3] =
        [("binary", leibniz), ("ternary", ternary), ("poisson", tlp)];
    for (kind, pool) in sums {
        for (id, o) in pool {
            push(
                &mut jobs,
                format!("direct_sum({kind})"),
                &format!("{id}+{id}"),
                None,
                Box::new(move || {
                    ready(
                        Recipe::DirectSum,
                        vec![alg(o), alg(o)],
                        Params::default().with("kind", kind),
                    )
                }),
            );
        }
    }
    for (id, o) in leibniz {
        push(
            &mut jobs,
            "semidirect_sum".into(),
            id,
            None,
            Box::new(move || match adjoint_bimodule(o, Identity::Bimodule2) {
                Ok(b) => ready(
                    Recipe::SemidirectSum,
                    vec![Document::Bimodule(b), alg(o)],
                    Params::default(),
                ),
                Err(e) => Prep::Skip(e.to_string()),
            }),
        );
        push(
            &mut jobs,
            "adjoint(bimodule2)".into(),
            id,
            None,
            Box::new(move || {
                ready(
                    Recipe::Adjoint,
                    vec![alg(o)],
                    Params::default().with("kind", "bimodule2"),
                )
            }),
        );
        push(
            &mut jobs,
            "bimodule_from_binary".into(),
            id,
            None,
            Box::new(move || match adjoint_bimodule(o, Identity::Bimodule2) {
                Ok(b) => ready(
                    Recipe::BimoduleFromBinary,
                    vec![Document::Bimodule(b)],
                    Params::default(),
                ),
                Err(e) => Prep::Skip(e.to_string()),
            }),
        );
    }
    for (id, o) in ternary {
        push(
            &mut jobs,
            "tensor_square_ternary".into(),
            id,
            None,
            Box::new(move || ready(Recipe::TensorSquareTernary, vec![alg(o)], Params::default())),
        );
        for (aid, a) in assoc
            .iter()
            .filter(|(_, a)| claims(a, Identity::EpsComm) && same_grading(a, o))
        {
            push(
                &mut jobs,
                "tensor_assoc_ternary".into(),
                &format!("{aid}*{id}"),
                None,
                Box::new(move || ready(Recipe::TensorAssocTernary, vec![alg(a), alg(o)], Params::default())),
            );
        }
        let adj = move || adjoint_bimodule(o, Identity::Bimodule3).map(Document::Bimodule);
        push(
            &mut jobs,
            "adjoint(bimodule3)".into(),
            id,
            None,
            Box::new(move || {
                ready(
                    Recipe::Adjoint,
                    vec![alg(o)],
                    Params::default().with("kind", "bimodule3"),
                )
            }),
        );
        push(
            &mut jobs,
            "semidirect3".into(),
            id,
            None,
            Box::new(move || match adj() {
                Ok(b) => ready(Recipe::Semidirect3, vec![b], Params::default()),
                Err(e) => Prep::Skip(e.to_string()),
            }),
        );
        push(
            &mut jobs,
            "bimodule_direct_sum".into(),
            id,
            None,
            Box::new(move || match adj() {
                Ok(b) => ready(Recipe::BimoduleDirectSum, vec![b.clone(), b], Params::default()),
                Err(e) => Prep::Skip(e.to_string()),
            }),
        );
        for &v in Variant::ALL {
            push(
                &mut jobs,
                "bimodule_tensor".into(),
                id,
                Some(v),
                Box::new(move || match adj() {
                    Ok(b) => ready(
                        Recipe::BimoduleTensor,
                        vec![b.clone(), b],
                        Params::default().with("variant", v),
                    ),
                    Err(e) => Prep::Skip(e.to_string()),
                }),
            );
        }
        push(
            &mut jobs,
            "rep_convert".into(),
            id,
            None,
            Box::new(move || match adj() {
                Ok(b) => ready(Recipe::RepConvert, vec![b], Params::default()),
                Err(e) => Prep::Skip(e.to_string()),
            }),
        );
    }
    for (id, t) in trialgebras {
        for &v in Variant::ALL {
            push(
                &mut jobs,
                "from_trialgebra(leibniz_poisson)".into(),
                id,
                Some(v),
                Box::new(move || {
                    ready(
                        Recipe::FromTrialgebra,
                        vec![alg(t)],
                        Params::default().with("target", "leibniz_poisson").with("variant", v),
                    )
                }),
            );
        }
        push(
            &mut jobs,
            "from_trialgebra(ternary)".into(),
            id,
            None,
            Box::new(move || {
                ready(
                    Recipe::FromTrialgebra,
                    vec![alg(t)],
                    Params::default().with("target", "ternary"),
                )
            }),
        );
        if trivially_graded(t) {
            push(
                &mut jobs,
                "from_trialgebra(star)".into(),
                id,
                None,
                Box::new(move || {
                    ready(
                        Recipe::FromTrialgebra,
                        vec![alg(t)],
                        Params::default().with("target", "star"),
                    )
                }),
            );
            // R = left multiplication by a square-zero element (weight 0), and R = id (weight -1)
            let nilpotent = (0..t.dim()).find(|&e| {
                let p = t.op("left").expect("trialgebra");
                p.apply_basis(&[e, e]).is_zero() && (0..t.dim()).any(|j| !p.apply_basis(&[e, j]).is_zero())
            });
            if let Some(e) = nilpotent {
                push(
                    &mut jobs,
                    "rb_trialgebra(left_symmetric)".into(),
                    id,
                    None,
                    Box::new(move || {
                        let mut t = t.clone();
                        t.maps.insert("r".into(), left_mult(&t, "left", e));
                        let note = format!("R = left multiplication by {}", t.basis.name(e));
                        let params = Params::default()
                            .with("map", "r")
                            .with("weight", 0)
                            .with("target", "left_symmetric");
                        Prep::Ready(Plan {
                            recipe: Recipe::RbTrialgebra,
                            inputs: vec![alg(&t)],
                            params,
                            note: Some(note),
                        })
                    }),
                );
            }
            push(
                &mut jobs,
                "rb_trialgebra(assoc)".into(),
                id,
                None,
                Box::new(move || {
                    let mut t = t.clone();
                    t.maps.insert("r".into(), LinearMap::identity(t.dim()));
                    let params = Params::default()
                        .with("map", "r")
                        .with("weight", -1)
                        .with("target", "assoc");
                    Prep::Ready(Plan {
                        recipe: Recipe::RbTrialgebra,
                        inputs: vec![alg(&t)],
                        params,
                        note: Some("R = id".into()),
                    })
                }),
            );
        }
    }
    for (id, a) in assoc {
        let mut targets = vec!["commutator_lie", "ternary_commutator", "lts", "jts_plain"];
        if a.map("theta").is_ok() {
            targets.push("jts_involution");
        }
        for target in targets {
            push(
                &mut jobs,
                format!("from_associative({target})"),
                id,
                None,
                Box::new(move || {
                    let mut p = Params::default().with("target", target);
                    if target == "jts_involution" {
                        p = p.with("map", "theta");
                    }
                    ready(Recipe::FromAssociative, vec![alg(a)], p)
                }),
            );
        }
        for &v in Variant::ALL {
            push(
                &mut jobs,
                "from_associative(comstrans)".into(),
                id,
                Some(v),
                Box::new(move || {
                    ready(
                        Recipe::FromAssociative,
                        vec![alg(a)],
                        Params::default().with("target", "comstrans").with("variant", v),
                    )
                }),
            );
        }
        push(
            &mut jobs,
            "from_dialgebra".into(),
            id,
            None,
            Box::new(move || ready(Recipe::FromDialgebra, vec![alg(&dialgebra_of(a))], Params::default())),
        );
    }
    for (id, p) in poisson {
        for r in ["nested", "bracket_of_product"] {
            push(
                &mut jobs,
                format!("poisson_to_ternary({r})"),
                id,
                None,
                Box::new(move || {
                    ready(
                        Recipe::PoissonToTernary,
                        vec![alg(p)],
                        Params::default().with("recipe", r),
                    )
                }),
            );
        }
    }
    for (id, t) in tlp {
        push(
            &mut jobs,
            "tensor_square_poisson3".into(),
            id,
            None,
            Box::new(move || ready(Recipe::TensorSquarePoisson3, vec![alg(t)], Params::default())),
        );
        push(
            &mut jobs,
            "opposite_product".into(),
            id,
            None,
            Box::new(move || ready(Recipe::OppositeProduct, vec![alg(t)], Params::default())),
        );
        push(
            &mut jobs,
            "adjoint(bimodule3_poisson)".into(),
            id,
            None,
            Box::new(move || {
                ready(
                    Recipe::Adjoint,
                    vec![alg(t)],
                    Params::default().with("kind", "bimodule3_poisson"),
                )
            }),
        );
        push(
            &mut jobs,
            "pullback".into(),
            id,
            None,
            Box::new(move || {
                let mut s = t.clone();
                s.maps.insert("alpha".into(), LinearMap::identity(s.dim()));
                let p = Params::default().with("map", "alpha");
                Prep::Ready(Plan {
                    recipe: Recipe::Pullback,
                    inputs: vec![alg(&s), alg(t)],
                    params: p,
                    note: Some("alpha = id".into()),
                })
            }),
        );
    }
    for (id, l) in lie {
        for target in ["lts", "comstrans"] {
            push(
                &mut jobs,
                format!("from_lie({target})"),
                id,
                None,
                Box::new(move || ready(Recipe::FromLie, vec![alg(l)], Params::default().with("target", target))),
            );
        }
    }
    for (id, j) in jts {
        push(
            &mut jobs,
            "jts_to_lts".into(),
            id,
            None,
            Box::new(move || ready(Recipe::JtsToLts, vec![alg(j)], Params::default())),
        );
    }
    if !corpus.is_empty() {
        for (id, f) in forms {
            for &v in Variant::ALL {
                push(
                    &mut jobs,
                    "comstrans_from_form".into(),
                    id,
                    Some(v),
                    Box::new(move || {
                        ready(
                            Recipe::ComstransFromForm,
                            vec![alg(f)],
                            Params::default().with("variant", v),
                        )
                    }),
                );
            }
        }
    }

    let mut rows: Vec<AuditRow> = jobs.par_iter().map(|j| run_job(j, opts)).collect();
    for row in rows.iter_mut() {
        row.ledger = LEDGER.contains(&row.theorem.as_str());
    }
    AuditReport { rows }
}
