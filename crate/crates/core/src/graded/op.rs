use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::report::{AxiomReport, Value, Witness};
use crate::scalar::{Field, Scalar};

use super::{GradedBasis, GradedElement, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpOutput {
    /// Values in the space itself.
    Algebra,
    /// Values in the ground field (bilinear forms).
    Scalar,
}

/// Sparse structure-constant tensor: each basis tuple maps to its image.
///
/// Scalar-valued operations keep their value as the coefficient on index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearOp {
    arity: usize,
    output: OpOutput,
    constants: BTreeMap<Vec<usize>, Vector>,
}

/// Result of [`op_apply`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpValue {
    Element(GradedElement),
    Scalar(Scalar),
}

impl MultilinearOp {
    pub fn new(arity: usize, output: OpOutput) -> Self {
        MultilinearOp {
            arity,
            output,
            constants: BTreeMap::new(),
        }
    }

    pub fn algebra(arity: usize) -> Self {
        MultilinearOp::new(arity, OpOutput::Algebra)
    }

    pub fn form(arity: usize) -> Self {
        MultilinearOp::new(arity, OpOutput::Scalar)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn output(&self) -> OpOutput {
        self.output
    }

    pub fn is_zero(&self) -> bool {
        self.constants.is_empty()
    }

    /// Adds `c * e_out` to the image of the basis tuple `args`.
    pub fn add_constant(&mut self, args: &[usize], out: usize, c: &Scalar) {
        assert_eq!(args.len(), self.arity, "wrong number of indices");
        if c.is_zero() {
            return;
        }
        let slot = self.constants.entry(args.to_vec()).or_default();
        slot.add_term(out, c);
        if slot.is_zero() {
            self.constants.remove(args);
        }
    }

    /// Adds `c` to the value of a scalar-valued operation on `args`.
    pub fn add_scalar_constant(&mut self, args: &[usize], c: &Scalar) {
        self.add_constant(args, 0, c);
    }

    /// Adds `v` to the image of `args`.
    pub fn add_image(&mut self, args: &[usize], v: &Vector) {
        for (i, c) in v.iter() {
            self.add_constant(args, i, c);
        }
    }

    pub fn set_image(&mut self, args: &[usize], v: Vector) {
        assert_eq!(args.len(), self.arity, "wrong number of indices");
        if v.is_zero() {
            self.constants.remove(args);
        } else {
            self.constants.insert(args.to_vec(), v);
        }
    }

    pub fn image(&self, args: &[usize]) -> Option<&Vector> {
        self.constants.get(args)
    }

    /// Image of a basis tuple (zero when absent).
    pub fn apply_basis(&self, args: &[usize]) -> Vector {
        self.constants.get(args).cloned().unwrap_or_default()
    }

    pub fn scalar_on_basis(&self, args: &[usize]) -> Scalar {
        self.constants.get(args).map(|v| v.get(0)).unwrap_or_default()
    }

    /// Nonzero constants in lexicographic tuple order.
    pub fn constants(&self) -> impl Iterator<Item = (&[usize], &Vector)> + '_ {
        self.constants.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Multilinear evaluation on coordinate vectors.
    pub fn apply(&self, args: &[&Vector]) -> Vector {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        let mut out = Vector::zero();
        if self.constants.is_empty() || args.iter().any(|a| a.is_zero()) {
            return out;
        }
        let mut idx = Vec::with_capacity(self.arity);
        self.apply_rec(args, &mut idx, &Scalar::one(), &mut out);
        out
    }

    fn apply_rec(&self, args: &[&Vector], idx: &mut Vec<usize>, coef: &Scalar, out: &mut Vector) {
        let k = idx.len();
        if k == self.arity {
            if let Some(img) = self.constants.get(idx.as_slice()) {
                out.axpy(coef, img);
            }
            return;
        }
        for (i, c) in args[k].iter() {
            idx.push(i);
            let next = if coef.is_one() { c.clone() } else { coef * c };
            self.apply_rec(args, idx, &next, out);
            idx.pop();
        }
    }

    pub fn apply_scalar(&self, args: &[&Vector]) -> Scalar {
        self.apply(args).get(0)
    }

    /// Same tensor with every image transformed.
    pub fn map_images(&self, f: impl Fn(&[usize], &Vector) -> Vector) -> MultilinearOp {
        let mut out = MultilinearOp::new(self.arity, self.output);
        for (k, v) in &self.constants {
            out.set_image(k, f(k, v));
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> MultilinearOp {
        self.map_images(|_, v| v.scaled(c))
    }

    /// Relabels input indices with `fin` and output indices with `fout`.
    pub fn reindex(&self, fin: impl Fn(usize) -> usize, fout: impl Fn(usize) -> usize) -> MultilinearOp {
        let mut out = MultilinearOp::new(self.arity, self.output);
        for (k, v) in &self.constants {
            let key: Vec<usize> = k.iter().map(|&i| fin(i)).collect();
            let img = match self.output {
                OpOutput::Algebra => v.reindex(&fout),
                OpOutput::Scalar => v.clone(),
            };
            out.add_image(&key, &img);
        }
        out
    }

    /// Sum of two tensors of the same shape.
    pub fn plus(&self, other: &MultilinearOp) -> MultilinearOp {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, v) in &other.constants {
            out.add_image(k, v);
        }
        out
    }

    pub fn to_field(&self, field: Field) -> Result<MultilinearOp> {
        let mut out = MultilinearOp::new(self.arity, self.output);
        for (k, v) in &self.constants {
            for (i, c) in v.iter() {
                out.add_constant(k, i, &field.coerce(c)?);
            }
        }
        Ok(out)
    }

    /// Records every constant whose output degree differs from the input degree sum
    /// (or, for forms, whose inputs do not sum to zero).
    pub fn grading_report(&self, name: &str, basis: &GradedBasis, report: &mut AxiomReport) {
        for (k, v) in &self.constants {
            let sum = basis.degree_sum(k);
            match self.output {
                OpOutput::Algebra => {
                    for (i, c) in v.iter() {
                        let ok = *basis.degree(i) == sum;
                        let mut tuple = k.clone();
                        tuple.push(i);
                        report.record(
                            || Witness {
                                equation: format!("grading:{name}"),
                                tuple,
                                lhs: Value::Vector(Vector::term(i, c.clone())),
                                rhs: Value::Vector(Vector::zero()),
                            },
                            ok,
                        );
                    }
                }
                OpOutput::Scalar => {
                    let c = v.get(0);
                    report.record(
                        || Witness {
                            equation: format!("grading:{name}"),
                            tuple: k.clone(),
                            lhs: Value::Scalar(c),
                            rhs: Value::Scalar(Scalar::zero()),
                        },
                        sum.is_zero(),
                    );
                }
            }
        }
    }

    /// Checks that indices are in range for a space of dimension `n`.
    pub fn check_bounds(&self, n: usize) -> Result<()> {
        for (k, v) in &self.constants {
            if k.iter().any(|&i| i >= n) {
                return Err(Error::input(format!("argument index out of range in {k:?}")));
            }
            if self.output == OpOutput::Algebra && v.max_index().is_some_and(|m| m >= n) {
                return Err(Error::input(format!("output index out of range for {k:?}")));
            }
        }
        Ok(())
    }
}

/// Evaluates `op` on elements; homogeneous inputs give an output with the summed degree.
pub fn op_apply(basis: &GradedBasis, op: &MultilinearOp, args: &[GradedElement]) -> Result<OpValue> {
    if args.len() != op.arity() {
        return Err(Error::input(format!(
            "operation has arity {}, got {} arguments",
            op.arity(),
            args.len()
        )));
    }
    let refs: Vec<&Vector> = args.iter().map(|a| &a.coeffs).collect();
    if refs.iter().any(|v| v.max_index().is_some_and(|m| m >= basis.len())) {
        return Err(Error::input("argument has coordinates outside the basis"));
    }
    Ok(match op.output() {
        OpOutput::Scalar => OpValue::Scalar(op.apply_scalar(&refs)),
        OpOutput::Algebra => {
            let degree = args
                .iter()
                .map(|a| a.declared_degree.clone())
                .collect::<Option<Vec<_>>>()
                .map(|ds| ds.iter().fold(basis.group().zero(), |acc, d| &acc + d));
            OpValue::Element(GradedElement {
                coeffs: op.apply(&refs),
                declared_degree: degree,
            })
        }
    })
}
