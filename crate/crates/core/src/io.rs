//! Canonical JSON documents for algebras and bimodules.
//!
//! Keys are sorted, constants are sorted by `(args, out)`, scalars are exact
//! strings, and the output ends with a newline, so a parsed-then-serialized
//! canonical document reproduces its input byte for byte.

use serde_json::{json, Map, Value};

use crate::axioms::{Identity, Variant};
use crate::error::{Error, Result};
use crate::graded::{
    BasisEntry, BimoduleObject, GradedAlgebraObject, GradedBasis, LinearMap, MultilinearOp, OpOutput, ACTION_NAMES,
    OP_NAMES,
};
use crate::grading::{Bicharacter, Builtin, GradingGroup};
use crate::scalar::{is_prime, Field, Scalar};

/// A parsed document: an algebra, or an algebra with a module over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Algebra(GradedAlgebraObject),
    Bimodule(BimoduleObject),
}

impl Document {
    pub fn algebra(&self) -> &GradedAlgebraObject {
        match self {
            Document::Algebra(a) => a,
            Document::Bimodule(b) => &b.algebra,
        }
    }

    pub fn bimodule(&self) -> Result<&BimoduleObject> {
        match self {
            Document::Bimodule(b) => Ok(b),
            Document::Algebra(_) => Err(Error::input("document has no module")),
        }
    }
}

fn scalar_str(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn basis_json(b: &GradedBasis) -> Value {
    Value::Array(
        b.entries()
            .iter()
            .map(|e| json!({"degree": e.degree.coords(), "name": e.name}))
            .collect(),
    )
}

fn op_json(op: &MultilinearOp) -> Value {
    let mut items: Vec<(Vec<usize>, Option<usize>, Scalar)> = vec![];
    for (args, v) in op.constants() {
        match op.output() {
            OpOutput::Scalar => items.push((args.to_vec(), None, v.get(0))),
            OpOutput::Algebra => {
                for (out, c) in v.iter() {
                    items.push((args.to_vec(), Some(out), c.clone()));
                }
            }
        }
    }
    items.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    Value::Array(
        items
            .into_iter()
            .map(|(args, out, c)| {
                let mut m = Map::new();
                m.insert("args".into(), json!(args));
                m.insert("coef".into(), scalar_str(&c));
                if let Some(o) = out {
                    m.insert("out".into(), json!(o));
                }
                Value::Object(m)
            })
            .collect(),
    )
}

fn ops_json<'a>(ops: impl IntoIterator<Item = (&'a String, &'a MultilinearOp)>) -> Value {
    Value::Object(ops.into_iter().map(|(k, op)| (k.clone(), op_json(op))).collect())
}

fn map_json(m: &LinearMap) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .into_iter()
        .map(|(r, c, v)| json!({"coef": v.to_string(), "col": c, "row": r}))
        .collect();
    json!({"cols": m.cols(), "entries": entries, "rows": m.rows()})
}

fn claims_json(claims: &[Identity]) -> Value {
    Value::Array(claims.iter().map(|c| Value::String(c.as_str().into())).collect())
}

fn algebra_json(obj: &GradedAlgebraObject) -> Map<String, Value> {
    let mut doc = Map::new();
    doc.insert("basis".into(), basis_json(&obj.basis));
    let bc = match obj.bicharacter.builtin_kind() {
        Some(k) => json!({"builtin": k.as_str()}),
        None => json!({"on_generators": obj
            .bicharacter
            .table()
            .iter()
            .map(|row| row.iter().map(scalar_str).collect::<Vec<_>>())
            .collect::<Vec<_>>()}),
    };
    doc.insert("bicharacter".into(), bc);
    doc.insert("claims".into(), claims_json(&obj.claims));
    if let Some(c) = &obj.comment {
        doc.insert("comment".into(), Value::String(c.clone()));
    }
    doc.insert(
        "field".into(),
        match obj.field {
            Field::Rationals => json!({"rationals": true}),
            Field::Prime(p) => json!({"prime": p}),
        },
    );
    let g = obj.basis.group();
    doc.insert(
        "group".into(),
        json!({"free_rank": g.free_rank(), "torsion": g.torsion()}),
    );
    if !obj.maps.is_empty() {
        doc.insert(
            "maps".into(),
            Value::Object(obj.maps.iter().map(|(k, m)| (k.clone(), map_json(m))).collect()),
        );
    }
    doc.insert("ops".into(), ops_json(&obj.ops));
    if !obj.provenance.is_empty() {
        doc.insert("provenance".into(), json!(obj.provenance));
    }
    if let Some(v) = obj.variant {
        doc.insert("variant".into(), Value::String(v.as_str().into()));
    }
    doc
}

fn render(doc: Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json values serialize");
    s.push('\n');
    s
}

/// Canonical text of an algebra.
pub fn serialize_algebra(obj: &GradedAlgebraObject) -> String {
    render(algebra_json(obj))
}

/// Canonical text of an algebra carrying a module block.
pub fn serialize_bimodule(b: &BimoduleObject) -> String {
    let mut doc = algebra_json(&b.algebra);
    let mut module = Map::new();
    module.insert("actions".into(), ops_json(&b.actions));
    module.insert("basis".into(), basis_json(&b.module_basis));
    module.insert("claims".into(), claims_json(&b.claims));
    if !b.provenance.is_empty() {
        module.insert("provenance".into(), json!(b.provenance));
    }
    doc.insert("module".into(), Value::Object(module));
    render(doc)
}

pub fn serialize_document(d: &Document) -> String {
    match d {
        Document::Algebra(a) => serialize_algebra(a),
        Document::Bimodule(b) => serialize_bimodule(b),
    }
}

/// Reads JSON values with the path of each one for error messages.
struct At<'a> {
    v: &'a Value,
    path: String,
}

impl<'a> At<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(
            if self.path.is_empty() {
                "$".to_string()
            } else {
                self.path.clone()
            },
            msg,
        )
    }

    fn obj(&self, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
        let m = self.v.as_object().ok_or_else(|| self.err("expected an object"))?;
        if let Some(k) = m.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(self.err(format!("unexpected member {k:?}")));
        }
        Ok(m)
    }

    fn child(&self, key: &str) -> Result<At<'a>> {
        let v = self
            .v
            .get(key)
            .ok_or_else(|| self.err(format!("missing member {key:?}")))?;
        Ok(self.at_key(key, v))
    }

    fn opt(&self, key: &str) -> Option<At<'a>> {
        self.v.get(key).map(|v| self.at_key(key, v))
    }

    fn at_key(&self, key: &str, v: &'a Value) -> At<'a> {
        let path = if self.path.is_empty() {
            key.to_string()
        } else {
            format!("{}.{key}", self.path)
        };
        At { v, path }
    }

    fn arr(&self) -> Result<Vec<At<'a>>> {
        let a = self.v.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(a.iter()
            .enumerate()
            .map(|(i, v)| At {
                v,
                path: format!("{}[{i}]", self.path),
            })
            .collect())
    }

    fn str(&self) -> Result<&'a str> {
        self.v.as_str().ok_or_else(|| self.err("expected a string"))
    }

    fn uint(&self) -> Result<u64> {
        self.v
            .as_u64()
            .ok_or_else(|| self.err("expected a non-negative integer"))
    }

    fn int(&self) -> Result<i64> {
        self.v.as_i64().ok_or_else(|| self.err("expected an integer"))
    }

    fn index(&self, bound: usize) -> Result<usize> {
        let i = self.uint()? as usize;
        if i >= bound {
            return Err(self.err(format!("index {i} out of range (dimension {bound})")));
        }
        Ok(i)
    }

    fn scalar(&self, field: Field) -> Result<Scalar> {
        field.parse(self.str()?).map_err(|e| self.err(e.to_string()))
    }

    fn wrap<T>(&self, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::Parse { .. } => e,
            other => self.err(other.to_string()),
        })
    }
}

fn parse_field(a: &At) -> Result<Field> {
    let m = a.obj(&["rationals", "prime"])?;
    match (m.get("rationals"), m.get("prime")) {
        (Some(Value::Bool(true)), None) => Ok(Field::Rationals),
        (None, Some(_)) => {
            let p = a.child("prime")?.uint()?;
            if !is_prime(p) {
                return Err(a.err(format!("{p} is not prime")));
            }
            Ok(Field::Prime(p))
        }
        _ => Err(a.err("expected {\"rationals\": true} or {\"prime\": p}")),
    }
}

fn parse_group(a: &At) -> Result<GradingGroup> {
    a.obj(&["free_rank", "torsion"])?;
    let r = a.child("free_rank")?.uint()? as usize;
    let torsion = a
        .child("torsion")?
        .arr()?
        .iter()
        .map(At::uint)
        .collect::<Result<Vec<_>>>()?;
    a.wrap(GradingGroup::new(r, torsion))
}

fn parse_bicharacter(a: &At, group: &GradingGroup) -> Result<Bicharacter> {
    a.obj(&["builtin", "on_generators"])?;
    let bc = if let Some(b) = a.opt("builtin") {
        if a.opt("on_generators").is_some() {
            return Err(a.err("give either builtin or on_generators"));
        }
        let kind = b.wrap(Builtin::parse(b.str()?))?;
        b.wrap(Bicharacter::builtin(kind, group))?
    } else {
        let t = a.child("on_generators")?;
        let table = t
            .arr()?
            .iter()
            .map(|row| {
                row.arr()?
                    .iter()
                    .map(|x| x.scalar(Field::Rationals))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        t.wrap(Bicharacter::new(group.clone(), table))?
    };
    let report = a.wrap(bc.validate())?;
    if let Some(w) = report.witnesses.first() {
        return Err(a.err(format!(
            "not a bicharacter: {} fails on generators {:?}",
            w.equation, w.tuple
        )));
    }
    Ok(bc)
}

fn parse_basis(a: &At, group: &GradingGroup) -> Result<GradedBasis> {
    let mut entries = vec![];
    for e in a.arr()? {
        e.obj(&["degree", "name"])?;
        let name = e.child("name")?.str()?.to_string();
        let d = e.child("degree")?;
        let coords = d.arr()?.iter().map(At::int).collect::<Result<Vec<_>>>()?;
        let degree = d.wrap(group.element(&coords))?;
        entries.push(BasisEntry { name, degree });
    }
    a.wrap(GradedBasis::new(group.clone(), entries))
}

fn parse_op(a: &At, arity: usize, output: OpOutput, n: usize, field: Field) -> Result<MultilinearOp> {
    let mut op = MultilinearOp::new(arity, output);
    let mut seen = std::collections::BTreeSet::new();
    for c in a.arr()? {
        let allowed: &[&str] = match output {
            OpOutput::Algebra => &["args", "coef", "out"],
            OpOutput::Scalar => &["args", "coef"],
        };
        c.obj(allowed)?;
        let args_at = c.child("args")?;
        let args = args_at.arr()?.iter().map(|x| x.index(n)).collect::<Result<Vec<_>>>()?;
        if args.len() != arity {
            return Err(args_at.err(format!("expected {arity} arguments")));
        }
        let coef = c.child("coef")?.scalar(field)?;
        let out = match output {
            OpOutput::Algebra => Some(c.child("out")?.index(n)?),
            OpOutput::Scalar => None,
        };
        if !seen.insert((args.clone(), out)) {
            return Err(c.err("duplicate constant"));
        }
        if coef.is_zero() {
            continue;
        }
        match out {
            Some(o) => op.add_constant(&args, o, &coef),
            None => op.add_scalar_constant(&args, &coef),
        }
    }
    Ok(op)
}

fn op_shape(name: &str) -> Option<(usize, OpOutput)> {
    match name {
        "bracket3" | "commutator3" | "translator3" => Some((3, OpOutput::Algebra)),
        "form2" => Some((2, OpOutput::Scalar)),
        n if OP_NAMES.contains(&n) => Some((2, OpOutput::Algebra)),
        _ => None,
    }
}

fn parse_claims(a: Option<At>) -> Result<Vec<Identity>> {
    let mut out = vec![];
    if let Some(a) = a {
        for c in a.arr()? {
            let id = c.wrap(Identity::parse(c.str()?))?;
            if out.contains(&id) {
                return Err(c.err("duplicate claim"));
            }
            out.push(id);
        }
    }
    out.sort();
    Ok(out)
}

fn parse_map(a: &At, n: usize, field: Field) -> Result<LinearMap> {
    a.obj(&["cols", "entries", "rows"])?;
    let rows = a.child("rows")?.uint()? as usize;
    let cols = a.child("cols")?.uint()? as usize;
    let mut entries = vec![];
    let mut seen = std::collections::BTreeSet::new();
    for e in a.child("entries")?.arr()? {
        e.obj(&["coef", "col", "row"])?;
        let r = e.child("row")?.index(rows)?;
        let c = e.child("col")?.index(cols)?;
        if !seen.insert((r, c)) {
            return Err(e.err("duplicate entry"));
        }
        entries.push((r, c, e.child("coef")?.scalar(field)?));
    }
    if rows != n || cols != n {
        return Err(a.err(format!("map must be {n}x{n}")));
    }
    a.wrap(LinearMap::from_entries(rows, cols, entries))
}

fn first_grading_error(report: &crate::report::AxiomReport) -> Option<String> {
    report
        .witnesses
        .first()
        .map(|w| format!("{} is not homogeneous on {}", w.equation, report.render_tuple(&w.tuple)))
}

const TOP_KEYS: &[&str] = &[
    "basis",
    "bicharacter",
    "claims",
    "comment",
    "field",
    "group",
    "maps",
    "module",
    "ops",
    "provenance",
    "variant",
];

/// Parses and validates a document (bicharacter axioms and grading are checked eagerly).
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let root = At {
        v: &value,
        path: String::new(),
    };
    root.obj(TOP_KEYS)?;
    let field = parse_field(&root.child("field")?)?;
    let group = parse_group(&root.child("group")?)?;
    let bicharacter = parse_bicharacter(&root.child("bicharacter")?, &group)?;
    let basis = parse_basis(&root.child("basis")?, &group)?;
    let n = basis.len();
    let mut obj = GradedAlgebraObject::new(field, basis, bicharacter);
    if let Some(ops) = root.opt("ops") {
        let m = ops.obj(OP_NAMES)?;
        for name in m.keys() {
            let (arity, output) = op_shape(name).expect("known op name");
            let at = ops.child(name)?;
            obj.set_op(name, parse_op(&at, arity, output, n, field)?);
        }
    }
    obj.claims = parse_claims(root.opt("claims"))?;
    if let Some(maps) = root.opt("maps") {
        let m = maps.v.as_object().ok_or_else(|| maps.err("expected an object"))?;
        for name in m.keys() {
            obj.maps.insert(name.clone(), parse_map(&maps.child(name)?, n, field)?);
        }
    }
    if let Some(c) = root.opt("comment") {
        obj.comment = Some(c.str()?.to_string());
    }
    if let Some(v) = root.opt("variant") {
        obj.variant = Some(v.wrap(Variant::parse(v.str()?))?);
    }
    if let Some(p) = root.opt("provenance") {
        obj.provenance = p
            .arr()?
            .iter()
            .map(|s| s.str().map(String::from))
            .collect::<Result<Vec<_>>>()?;
    }
    if let Some(msg) = first_grading_error(&obj.grading_check()) {
        return Err(Error::parse("ops", msg));
    }
    for (name, m) in &obj.maps {
        if !m.is_even(&obj.basis, &obj.basis) {
            return Err(Error::parse(format!("maps.{name}"), "map is not even"));
        }
    }
    let Some(module) = root.opt("module") else {
        return Ok(Document::Algebra(obj));
    };
    module.obj(&["actions", "basis", "claims", "provenance"])?;
    let module_basis = parse_basis(&module.child("basis")?, &obj.basis.group().clone())?;
    let mut b = BimoduleObject::new(obj, module_basis);
    let total = module.wrap(b.combined_basis())?.len();
    if let Some(actions) = module.opt("actions") {
        let names: Vec<&str> = ACTION_NAMES.iter().map(|a| a.0).collect();
        let m = actions.obj(&names)?;
        for name in m.keys() {
            let arity = ACTION_NAMES.iter().find(|a| a.0 == name).expect("checked").2;
            let at = actions.child(name)?;
            b.actions
                .insert(name.clone(), parse_op(&at, arity, OpOutput::Algebra, total, field)?);
        }
    }
    for id in parse_claims(module.opt("claims"))? {
        b.add_claim(id);
    }
    if let Some(p) = module.opt("provenance") {
        b.provenance = p
            .arr()?
            .iter()
            .map(|s| s.str().map(String::from))
            .collect::<Result<Vec<_>>>()?;
    }
    if let Some(msg) = first_grading_error(&module.wrap(b.grading_check())?) {
        return Err(Error::parse("module.actions", msg));
    }
    Ok(Document::Bimodule(b))
}

/// Parses a document that must not carry a module block.
pub fn parse_algebra(text: &str) -> Result<GradedAlgebraObject> {
    match parse_document(text)? {
        Document::Algebra(a) => Ok(a),
        Document::Bimodule(_) => Err(Error::parse("module", "expected a plain algebra document")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MIN: &str = r#"{"basis":[{"degree":[1],"name":"a"}],"bicharacter":{"builtin":"Z2"},"field":{"rationals":true},"group":{"free_rank":0,"torsion":[2]}}"#;

    #[test]
    fn empty_ops_document_parses() {
        let obj = parse_algebra(MIN).unwrap();
        assert!(obj.ops.is_empty());
        let text = serialize_algebra(&obj);
        assert_eq!(serialize_algebra(&parse_algebra(&text).unwrap()), text);
    }

    #[test]
    fn zero_denominator_names_the_entry() {
        let doc = MIN.replace(
            r#""field""#,
            r#""ops":{"product2":[{"args":[0,0],"coef":"1/0","out":0}]},"field""#,
        );
        match parse_algebra(&doc) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "ops.product2[0].coef"),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn ungraded_constant_is_rejected() {
        let doc = MIN.replace(
            r#""field""#,
            r#""ops":{"product2":[{"args":[0,0],"coef":"1","out":0}]},"field""#,
        );
        assert!(matches!(parse_algebra(&doc), Err(Error::Parse { .. })));
    }
}
