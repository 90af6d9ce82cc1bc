//! Equation evaluation over basis tuples.

use rand::Rng;
use rayon::prelude::*;

use crate::graded::{GradedAlgebraObject, GradedBasis, MultilinearOp, Vector};
use crate::grading::{Bicharacter, GroupElement};
use crate::report::{AxiomReport, Value, Witness};
use crate::scalar::Scalar;

use super::{CheckOptions, Variant};

/// A homogeneous argument: coordinates and degree.
#[derive(Clone, Debug)]
pub struct Arg {
    pub v: Vector,
    pub d: GroupElement,
}

impl Arg {
    pub fn basis(basis: &GradedBasis, i: usize) -> Arg {
        Arg {
            v: Vector::unit(i),
            d: basis.degree(i).clone(),
        }
    }
}

pub type EvalFn<'a, C> = Box<dyn Fn(&C, &[Arg]) -> (Vector, Vector) + Send + Sync + 'a>;
pub type FilterFn<'a> = Box<dyn Fn(&[Arg]) -> bool + Send + Sync + 'a>;

/// One multilinear equation `lhs = rhs`, checked on every tuple of the slot domains.
pub struct Equation<'a, C> {
    pub id: String,
    pub arity: usize,
    /// Allowed basis indices per slot; `None` means the whole basis.
    pub slots: Option<Vec<Vec<usize>>>,
    pub eval: EvalFn<'a, C>,
    pub filter: Option<FilterFn<'a>>,
    /// Values are scalars stored on coordinate 0.
    pub scalar: bool,
}

impl<'a, C> Equation<'a, C> {
    pub fn new(
        id: impl Into<String>,
        arity: usize,
        eval: impl Fn(&C, &[Arg]) -> (Vector, Vector) + Send + Sync + 'a,
    ) -> Self {
        Equation {
            id: id.into(),
            arity,
            slots: None,
            eval: Box::new(eval),
            filter: None,
            scalar: false,
        }
    }

    pub fn with_filter(mut self, f: impl Fn(&[Arg]) -> bool + Send + Sync + 'a) -> Self {
        self.filter = Some(Box::new(f));
        self
    }

    pub fn with_slots(mut self, id: impl Into<String>, slots: Vec<Vec<usize>>) -> Self {
        assert_eq!(slots.len(), self.arity);
        self.id = id.into();
        self.slots = Some(slots);
        self
    }

    pub fn scalar_valued(mut self) -> Self {
        self.scalar = true;
        self
    }
}

/// Read-only view of an algebra object used by equation closures.
pub struct Ctx<'a> {
    pub obj: &'a GradedAlgebraObject,
    pub variant: Variant,
}

impl<'a> Ctx<'a> {
    pub fn new(obj: &'a GradedAlgebraObject, variant: Variant) -> Self {
        Ctx { obj, variant }
    }

    pub fn op(&self, name: &str) -> &MultilinearOp {
        self.obj
            .ops
            .get(name)
            .unwrap_or_else(|| panic!("operation {name} was checked to exist"))
    }

    /// `name(args...)` on vectors.
    pub fn ap(&self, name: &str, args: &[&Vector]) -> Vector {
        self.op(name).apply(args)
    }

    pub fn eps(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        self.obj.bicharacter.eval(a, b)
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.obj.bicharacter
    }
}

/// `c * v` without cloning when `c` is one.
pub fn sc(c: &Scalar, v: Vector) -> Vector {
    if c.is_one() {
        v
    } else {
        v.scaled(c)
    }
}

/// Sum of degrees.
pub fn dsum(ds: &[&GroupElement]) -> GroupElement {
    let mut it = ds.iter();
    let first = (*it.next().expect("at least one degree")).clone();
    it.fold(first, |acc, d| &acc + d)
}

struct Found {
    key: (Vec<usize>, usize),
    witness: Witness,
}

struct Partial {
    checked: u64,
    violations: u64,
    found: Vec<Found>,
}

fn domains<C>(eq: &Equation<C>, n: usize) -> Vec<Vec<usize>> {
    eq.slots.clone().unwrap_or_else(|| vec![(0..n).collect(); eq.arity])
}

#[allow(clippy::too_many_arguments)]
fn run_chunk<C>(
    ctx: &C,
    eq: &Equation<C>,
    eq_index: usize,
    basis: &GradedBasis,
    doms: &[Vec<usize>],
    first: usize,
    cap: Option<usize>,
    stop_after_first: bool,
    skip_eval: bool,
) -> Partial {
    let mut part = Partial {
        checked: 0,
        violations: 0,
        found: vec![],
    };
    let arity = doms.len();
    if doms[1..].iter().any(Vec::is_empty) {
        return part;
    }
    let mut pos = vec![0usize; arity];
    let mut tuple = vec![first; arity];
    loop {
        for k in 1..arity {
            tuple[k] = doms[k][pos[k]];
        }
        let args: Vec<Arg> = tuple.iter().map(|&i| Arg::basis(basis, i)).collect();
        if eq.filter.as_ref().is_none_or(|f| f(&args)) {
            part.checked += 1;
            if !skip_eval && !(stop_after_first && part.violations > 0) {
                let (lhs, rhs) = (eq.eval)(ctx, &args);
                if lhs != rhs {
                    part.violations += 1;
                    if cap.is_none_or(|c| part.found.len() < c) {
                        let (lhs, rhs) = if eq.scalar {
                            (Value::Scalar(lhs.get(0)), Value::Scalar(rhs.get(0)))
                        } else {
                            (Value::Vector(lhs), Value::Vector(rhs))
                        };
                        part.found.push(Found {
                            key: (tuple.clone(), eq_index),
                            witness: Witness {
                                equation: eq.id.clone(),
                                tuple: tuple.clone(),
                                lhs,
                                rhs,
                            },
                        });
                    }
                }
            }
        }
        // advance the odometer over slots 1..arity
        let mut k = arity;
        loop {
            if k == 1 {
                return part;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < doms[k].len() {
                break;
            }
            pos[k] = 0;
        }
    }
}

/// Checks every equation on every tuple of its slot domains over `basis`.
///
/// Witnesses are ordered by tuple (lexicographically), then by equation, and
/// capped; the result does not depend on how the work is scheduled.
pub fn run<C: Sync>(
    ctx: &C,
    eqs: &[Equation<C>],
    basis: &GradedBasis,
    labels: Vec<String>,
    opts: &CheckOptions,
) -> AxiomReport {
    let n = basis.len();
    let mut checked = 0u64;
    let mut violations = 0u64;
    let mut found: Vec<Found> = vec![];
    for (ei, eq) in eqs.iter().enumerate() {
        let doms = domains(eq, n);
        if doms.iter().any(Vec::is_empty) {
            continue;
        }
        let firsts = doms[0].clone();
        let parts: Vec<Partial> = if opts.parallel && !opts.fail_fast {
            firsts
                .par_iter()
                .map(|&f| run_chunk(ctx, eq, ei, basis, &doms, f, opts.cap, false, false))
                .collect()
        } else {
            let mut out = vec![];
            let mut failed = violations > 0;
            for &f in &firsts {
                let skip = opts.fail_fast && failed;
                let p = run_chunk(ctx, eq, ei, basis, &doms, f, opts.cap, opts.fail_fast, skip);
                failed |= p.violations > 0;
                out.push(p);
            }
            out
        };
        for p in parts {
            checked += p.checked;
            violations += p.violations;
            found.extend(p.found);
        }
    }
    found.sort_by(|a, b| a.key.cmp(&b.key));
    if let Some(c) = opts.cap {
        found.truncate(c);
    }
    let mut report = AxiomReport::new(labels).with_cap(opts.cap);
    report.checked_count = checked;
    report.violations = violations;
    report.witnesses = found.into_iter().map(|f| f.witness).collect();
    report
}

/// A random homogeneous element of degree `d` (zero if that component is empty).
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    basis: &GradedBasis,
    d: &GroupElement,
    field: crate::scalar::Field,
) -> Vector {
    let mut v = Vector::zero();
    for i in 0..basis.len() {
        if basis.degree(i) == d {
            v.add_term(i, &field.from_i64(rng.gen_range(-3..=3)));
        }
    }
    v
}

/// Evaluates equations on random homogeneous non-basis tuples; degrees are
/// drawn from those occurring in the basis.
pub fn spot_check<C, R: Rng>(
    ctx: &C,
    eqs: &[Equation<C>],
    basis: &GradedBasis,
    field: crate::scalar::Field,
    samples: usize,
    rng: &mut R,
) -> AxiomReport {
    let degrees: Vec<GroupElement> = basis.blocks().into_keys().collect();
    let mut report = AxiomReport::new(basis.names());
    if degrees.is_empty() {
        return report;
    }
    for eq in eqs {
        if eq.slots.is_some() {
            continue;
        }
        for _ in 0..samples {
            let args: Vec<Arg> = (0..eq.arity)
                .map(|_| {
                    let d = degrees[rng.gen_range(0..degrees.len())].clone();
                    Arg {
                        v: random_homogeneous(rng, basis, &d, field),
                        d,
                    }
                })
                .collect();
            if eq.filter.as_ref().is_some_and(|f| !f(&args)) {
                continue;
            }
            let (lhs, rhs) = (eq.eval)(ctx, &args);
            let ok = lhs == rhs;
            report.record(
                || Witness {
                    equation: eq.id.clone(),
                    tuple: vec![],
                    lhs: Value::Vector(lhs),
                    rhs: Value::Vector(rhs),
                },
                ok,
            );
        }
    }
    report
}
