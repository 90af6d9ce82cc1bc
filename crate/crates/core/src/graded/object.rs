use std::collections::BTreeMap;

use crate::axioms::{Identity, Variant};
use crate::error::{Error, Result};
use crate::grading::{Bicharacter, GroupElement};
use crate::report::{AxiomReport, Value, Witness};
use crate::scalar::{Field, Scalar};

use super::{GradedBasis, LinearMap, MultilinearOp, OpOutput, Vector};

/// Operation names an algebra object may carry.
pub const OP_NAMES: &[&str] = &[
    "product2",
    "bracket2",
    "bracket3",
    "left",
    "middle",
    "right",
    "commutator3",
    "translator3",
    "form2",
];

/// Action tensor names of a bimodule, with the operation of the combined
/// space they extend and their arity.
pub const ACTION_NAMES: &[(&str, &str, usize)] = &[
    ("left_act", "bracket2", 2),
    ("right_act", "bracket2", 2),
    ("module_bracket", "bracket2", 2),
    ("act_MLL", "bracket3", 3),
    ("act_LML", "bracket3", 3),
    ("act_LLM", "bracket3", 3),
    ("mod_prod_left", "product2", 2),
    ("mod_prod_right", "product2", 2),
];

fn expected_arity(name: &str) -> Option<(usize, OpOutput)> {
    Some(match name {
        "product2" | "bracket2" | "left" | "middle" | "right" => (2, OpOutput::Algebra),
        "bracket3" | "commutator3" | "translator3" => (3, OpOutput::Algebra),
        "form2" => (2, OpOutput::Scalar),
        _ => return None,
    })
}

/// A graded space with named structure-constant operations and claimed identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraObject {
    pub field: Field,
    pub basis: GradedBasis,
    pub bicharacter: Bicharacter,
    pub ops: BTreeMap<String, MultilinearOp>,
    /// Sorted, without duplicates.
    pub claims: Vec<Identity>,
    pub maps: BTreeMap<String, LinearMap>,
    /// Axiom variant the claims are meant under, where one applies.
    pub variant: Option<Variant>,
    pub comment: Option<String>,
    /// How the object was obtained, one step per entry.
    pub provenance: Vec<String>,
}

impl GradedAlgebraObject {
    pub fn new(field: Field, basis: GradedBasis, bicharacter: Bicharacter) -> Self {
        GradedAlgebraObject {
            field,
            basis,
            bicharacter,
            ops: BTreeMap::new(),
            claims: vec![],
            maps: BTreeMap::new(),
            variant: None,
            comment: None,
            provenance: vec![],
        }
    }

    /// Same field, grading and basis, no operations.
    pub fn empty_like(&self, basis: GradedBasis) -> Self {
        GradedAlgebraObject::new(self.field, basis, self.bicharacter.clone())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.names()
    }

    pub fn op(&self, name: &str) -> Result<&MultilinearOp> {
        self.ops
            .get(name)
            .ok_or_else(|| Error::input(format!("object has no operation {name:?}")))
    }

    pub fn has_op(&self, name: &str) -> bool {
        self.ops.contains_key(name)
    }

    pub fn with_op(mut self, name: &str, op: MultilinearOp) -> Self {
        self.ops.insert(name.to_string(), op);
        self
    }

    pub fn set_op(&mut self, name: &str, op: MultilinearOp) {
        self.ops.insert(name.to_string(), op);
    }

    pub fn claim(mut self, id: Identity) -> Self {
        self.add_claim(id);
        self
    }

    pub fn add_claim(&mut self, id: Identity) {
        if let Err(pos) = self.claims.binary_search(&id) {
            self.claims.insert(pos, id);
        }
    }

    pub fn map(&self, name: &str) -> Result<&LinearMap> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::input(format!("object has no map {name:?}")))
    }

    pub fn with_provenance(mut self, step: impl Into<String>) -> Self {
        self.provenance.push(step.into());
        self
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        self.basis.degree(i)
    }

    /// `ε(deg e_i, deg e_j)`.
    pub fn eps(&self, i: usize, j: usize) -> Scalar {
        self.bicharacter.eval(self.basis.degree(i), self.basis.degree(j))
    }

    /// Table of `ε(deg e_i, deg e_j)` over all basis pairs.
    pub fn eps_table(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.eps(i, j)).collect()).collect()
    }

    /// Whether every operation, map and bicharacter value lies in `self.field`
    /// and the shapes match the basis.
    pub fn check_shapes(&self) -> Result<()> {
        let n = self.dim();
        for (name, op) in &self.ops {
            if let Some((arity, output)) = expected_arity(name) {
                if op.arity() != arity || op.output() != output {
                    return Err(Error::input(format!("operation {name} has the wrong shape")));
                }
            }
            op.check_bounds(n)
                .map_err(|e| Error::input(format!("operation {name}: {e}")))?;
        }
        for (name, m) in &self.maps {
            if m.rows() != n || m.cols() != n {
                return Err(Error::input(format!("map {name} is not {n}x{n}")));
            }
        }
        Ok(())
    }

    /// Moves every scalar into `field`.
    pub fn to_field(&self, field: Field) -> Result<Self> {
        let mut out = self.clone();
        out.field = field;
        out.bicharacter = self.bicharacter.to_field(field)?;
        for (name, op) in &self.ops {
            out.ops.insert(name.clone(), op.to_field(field)?);
        }
        for (name, m) in &self.maps {
            out.maps.insert(name.clone(), m.to_field(field)?);
        }
        Ok(out)
    }

    pub fn grading_check(&self) -> AxiomReport {
        grading_check(self)
    }
}

/// Degree homogeneity of every structure constant.
pub fn grading_check(obj: &GradedAlgebraObject) -> AxiomReport {
    let mut report = AxiomReport::new(obj.labels());
    for (name, op) in &obj.ops {
        op.grading_report(name, &obj.basis, &mut report);
    }
    report
}

/// A module over an algebra object. Action tensors are indexed over the
/// combined space: algebra basis first, then module basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleObject {
    pub algebra: GradedAlgebraObject,
    pub module_basis: GradedBasis,
    pub actions: BTreeMap<String, MultilinearOp>,
    pub claims: Vec<Identity>,
    pub provenance: Vec<String>,
}

impl BimoduleObject {
    pub fn new(algebra: GradedAlgebraObject, module_basis: GradedBasis) -> Self {
        BimoduleObject {
            algebra,
            module_basis,
            actions: BTreeMap::new(),
            claims: vec![],
            provenance: vec![],
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn module_dim(&self) -> usize {
        self.module_basis.len()
    }

    /// Index of module basis vector `m` in the combined space.
    pub fn m(&self, m: usize) -> usize {
        self.algebra_dim() + m
    }

    pub fn action(&self, name: &str) -> Result<&MultilinearOp> {
        self.actions
            .get(name)
            .ok_or_else(|| Error::input(format!("bimodule has no action {name:?}")))
    }

    pub fn action_or_zero(&self, name: &str) -> MultilinearOp {
        self.actions.get(name).cloned().unwrap_or_else(|| {
            let arity = ACTION_NAMES
                .iter()
                .find(|(n, _, _)| *n == name)
                .map_or(2, |&(_, _, a)| a);
            MultilinearOp::algebra(arity)
        })
    }

    pub fn add_claim(&mut self, id: Identity) {
        if let Err(pos) = self.claims.binary_search(&id) {
            self.claims.insert(pos, id);
        }
    }

    pub fn combined_basis(&self) -> Result<GradedBasis> {
        self.algebra.basis.concat(&self.module_basis, ("", ""))
    }

    /// The algebra and module as one object: algebra operations extended by
    /// the action tensors they govern.
    pub fn combined_object(&self) -> Result<GradedAlgebraObject> {
        let mut obj = self.algebra.empty_like(self.combined_basis()?);
        for (name, op) in &self.algebra.ops {
            obj.set_op(name, op.clone());
        }
        for (name, act) in &self.actions {
            let (_, target, arity) = ACTION_NAMES
                .iter()
                .find(|(n, _, _)| n == name)
                .ok_or_else(|| Error::input(format!("unknown action {name:?}")))?;
            let merged = match obj.ops.get(*target) {
                Some(op) => op.plus(act),
                None => {
                    assert_eq!(act.arity(), *arity);
                    act.clone()
                }
            };
            obj.set_op(target, merged);
        }
        Ok(obj)
    }

    /// Degree homogeneity of the action tensors across the combined grading.
    pub fn grading_check(&self) -> Result<AxiomReport> {
        let basis = self.combined_basis()?;
        let mut report = AxiomReport::new(basis.names());
        for (name, act) in &self.actions {
            act.grading_report(name, &basis, &mut report);
        }
        Ok(report)
    }
}

/// Which of the three families of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepKind {
    Lambda,
    Mu,
    Rho,
}

/// `(λ, μ, ρ)`: module endomorphisms attached to pairs of algebra basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationObject {
    pub algebra: GradedAlgebraObject,
    pub module_basis: GradedBasis,
    pub lambda: BTreeMap<(usize, usize), LinearMap>,
    pub mu: BTreeMap<(usize, usize), LinearMap>,
    pub rho: BTreeMap<(usize, usize), LinearMap>,
}

impl RepresentationObject {
    pub fn new(algebra: GradedAlgebraObject, module_basis: GradedBasis) -> Self {
        RepresentationObject {
            algebra,
            module_basis,
            lambda: BTreeMap::new(),
            mu: BTreeMap::new(),
            rho: BTreeMap::new(),
        }
    }

    pub fn family(&self, kind: RepKind) -> &BTreeMap<(usize, usize), LinearMap> {
        match kind {
            RepKind::Lambda => &self.lambda,
            RepKind::Mu => &self.mu,
            RepKind::Rho => &self.rho,
        }
    }

    pub fn family_mut(&mut self, kind: RepKind) -> &mut BTreeMap<(usize, usize), LinearMap> {
        match kind {
            RepKind::Lambda => &mut self.lambda,
            RepKind::Mu => &mut self.mu,
            RepKind::Rho => &mut self.rho,
        }
    }

    /// The endomorphism for `(e_i, e_j)`; zero when absent.
    pub fn get(&self, kind: RepKind, i: usize, j: usize) -> LinearMap {
        let k = self.module_basis.len();
        self.family(kind)
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| LinearMap::zero(k, k))
    }

    /// Applies the family to an algebra pair given as vectors, by bilinearity.
    pub fn apply(&self, kind: RepKind, x: &Vector, y: &Vector, m: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if let Some(map) = self.family(kind).get(&(i, j)) {
                    out.axpy(&(a * b), &map.apply(m));
                }
            }
        }
        out
    }

    /// Each `λ_{i,j}`, `μ_{i,j}`, `ρ_{i,j}` must raise module degree by `deg e_i + deg e_j`.
    pub fn grading_check(&self) -> Result<AxiomReport> {
        let k = self.module_basis.len();
        let n = self.algebra.dim();
        let mut report = AxiomReport::new(self.module_basis.names());
        for kind in [RepKind::Lambda, RepKind::Mu, RepKind::Rho] {
            for (&(i, j), map) in self.family(kind) {
                if i >= n || j >= n || map.rows() != k || map.cols() != k {
                    return Err(Error::input(format!("{kind:?} entry ({i},{j}) has the wrong shape")));
                }
                let shift = self.algebra.basis.degree_sum(&[i, j]);
                for (r, c, v) in map.entries() {
                    let ok = *self.module_basis.degree(r) == self.module_basis.degree(c) + &shift;
                    report.record(
                        || Witness {
                            equation: format!(
                                "grading:{kind:?}({},{})",
                                self.algebra.basis.name(i),
                                self.algebra.basis.name(j)
                            ),
                            tuple: vec![r, c],
                            lhs: Value::Scalar(v.clone()),
                            rhs: Value::Scalar(Scalar::zero()),
                        },
                        ok,
                    );
                }
            }
        }
        Ok(report)
    }
}
