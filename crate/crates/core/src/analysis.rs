//! Centers, Leibniz kernel, centroid spaces and exhaustive operator search.

use rayon::prelude::*;

use crate::axioms::{check_identity, check_operator_with, default_op, CheckOptions, Identity, Predicate};
use crate::error::{Error, Result};
use crate::graded::{GradedAlgebraObject, LinearMap, Vector};
use crate::linalg::{nullspace, Subspace};
use crate::scalar::{is_prime, Field, Scalar};

/// Centers and Leibniz kernel of a binary bracket, as canonical subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSubspaces {
    /// `{c : [c, L] = 0}`
    pub left_center: Subspace,
    /// `{c : [L, c] = 0}`
    pub right_center: Subspace,
    pub center: Subspace,
    /// Span of squares, via `[u,v] + ε(u,v)[v,u]` over basis pairs.
    pub leibniz_kernel: Subspace,
}

/// The generators `[e_i,e_j] + ε(e_i,e_j)[e_j,e_i]` for `i ≤ j`.
pub fn polarization_generators(l: &GradedAlgebraObject) -> Result<Vec<Vector>> {
    let b = l.op("bracket2")?;
    let n = l.dim();
    let mut out = vec![];
    for i in 0..n {
        for j in i..n {
            let mut v = b.apply_basis(&[i, j]);
            v.axpy(&l.eps(i, j), &b.apply_basis(&[j, i]));
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Rows of the linear system `[c, e_j] = 0` (left) or `[e_j, c] = 0` (right) in the coordinates of `c`.
fn center_constraints(l: &GradedAlgebraObject, left: bool) -> Result<Vec<Vec<Scalar>>> {
    let b = l.op("bracket2")?;
    let n = l.dim();
    let mut rows = vec![];
    for j in 0..n {
        let images: Vec<Vector> = (0..n)
            .map(|c| {
                if left {
                    b.apply_basis(&[c, j])
                } else {
                    b.apply_basis(&[j, c])
                }
            })
            .collect();
        for t in 0..n {
            let row: Vec<Scalar> = images.iter().map(|v| v.get(t)).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

fn in_field(field: Field, s: Subspace) -> Result<Subspace> {
    let rows = s
        .dense_basis()
        .iter()
        .map(|r| r.iter().map(|x| field.coerce(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span_dense(s.ambient(), rows))
}

pub fn structure_subspaces(l: &GradedAlgebraObject) -> Result<StructureSubspaces> {
    let report = check_identity(l, Identity::Leibniz2)?;
    if !report.passed() {
        return Err(Error::precondition("input does not satisfy LEIBNIZ2", report));
    }
    let n = l.dim();
    let left_center = in_field(l.field, Subspace::kernel_of(&center_constraints(l, true)?, n))?;
    let right_center = in_field(l.field, Subspace::kernel_of(&center_constraints(l, false)?, n))?;
    let center = left_center.intersect(&right_center);
    let center = in_field(l.field, center)?;
    let leibniz_kernel = Subspace::span(n, polarization_generators(l)?);
    Ok(StructureSubspaces {
        left_center,
        right_center,
        center,
        leibniz_kernel,
    })
}

/// Basis of all even maps `θ` with `θ(op(x,…)) = op(…,θ(x_k),…)` in every slot,
/// for the operation of the given arity, in reduced echelon form over the
/// even-entry coordinates.
pub fn centroid_space(l: &GradedAlgebraObject, arity: usize) -> Result<Vec<LinearMap>> {
    let op_name = default_op(l, arity)?;
    let op = l.op(op_name)?;
    let n = l.dim();
    let positions = l.basis.even_positions();
    let unknown = |r: usize, c: usize| positions.iter().position(|&p| p == (r, c));
    let mut rows: Vec<Vec<Scalar>> = vec![];
    let mut tuple = vec![0usize; arity];
    let total = n.pow(arity as u32);
    for code in 0..total {
        let mut rest = code;
        for slot in tuple.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        let value = op.apply_basis(&tuple);
        for k in 0..arity {
            // θ applied to slot k: Σ_r θ_{r,x_k} op(.., e_r, ..)
            let moved: Vec<(usize, Vector)> = (0..n)
                .filter_map(|r| {
                    unknown(r, tuple[k]).map(|u| {
                        let mut t = tuple.clone();
                        t[k] = r;
                        (u, op.apply_basis(&t))
                    })
                })
                .collect();
            for t in 0..n {
                let mut row = vec![Scalar::zero(); positions.len()];
                for (c, x) in value.iter() {
                    if let Some(u) = unknown(t, c) {
                        row[u] = &row[u] + x;
                    }
                }
                for (u, v) in &moved {
                    let x = v.get(t);
                    if !x.is_zero() {
                        row[*u] = &row[*u] - &x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions = Subspace::span_dense(positions.len(), nullspace(&rows, positions.len()));
    solutions
        .dense_basis()
        .iter()
        .map(|sol| {
            let entries = positions
                .iter()
                .zip(sol)
                .filter(|(_, x)| !x.is_zero())
                .map(|(&(r, c), x)| Ok((r, c, l.field.coerce(x)?)))
                .collect::<Result<Vec<_>>>()?;
            LinearMap::from_entries(n, n, entries)
        })
        .collect()
}

pub const DEFAULT_SEARCH_BUDGET: u128 = 531_441;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub p: u64,
    pub predicate: Predicate,
    pub weight: Option<Scalar>,
    /// Operation the predicate refers to; defaults as in [`default_op`].
    pub op: Option<String>,
    /// Largest number of maps enumerated.
    pub budget: u128,
    /// Maximum number of maps returned.
    pub result_cap: Option<usize>,
    /// Permit `p = 2`, where polarization arguments fail.
    pub allow_p2: bool,
}

impl SearchConfig {
    pub fn new(p: u64, predicate: Predicate) -> Self {
        SearchConfig {
            p,
            predicate,
            weight: None,
            op: None,
            budget: DEFAULT_SEARCH_BUDGET,
            result_cap: None,
            allow_p2: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Satisfying maps in enumeration order, over `GF(p)`.
    pub maps: Vec<LinearMap>,
    /// Number of satisfying maps among all enumerated; exact.
    pub count: u64,
    pub enumerated: u64,
    pub truncated: bool,
}

/// Every even map over `GF(p)` satisfying the predicate.
///
/// Maps are enumerated lexicographically in their even entries taken
/// row-major, each entry running over `0, …, p-1`.
pub fn search_operators(l: &GradedAlgebraObject, cfg: &SearchConfig) -> Result<SearchResult> {
    if !is_prime(cfg.p) {
        return Err(Error::input(format!("{} is not prime", cfg.p)));
    }
    if cfg.p == 2 && !cfg.allow_p2 {
        return Err(Error::input("p = 2 needs the explicit characteristic-2 flag"));
    }
    if matches!(cfg.result_cap, Some(0)) || cfg.budget == 0 {
        return Err(Error::input("caps must be positive"));
    }
    let field = Field::Prime(cfg.p);
    let obj = match l.field {
        Field::Rationals => l.to_field(field)?,
        f if f == field => l.clone(),
        f => return Err(Error::input(format!("object is over {f}, search is over {field}"))),
    };
    let weight = cfg.weight.as_ref().map(|w| field.coerce(w)).transpose()?;
    let positions = obj.basis.even_positions();
    let size = (cfg.p as u128)
        .checked_pow(positions.len() as u32)
        .filter(|&s| s <= cfg.budget)
        .ok_or_else(|| {
            Error::input(format!(
                "search space {}^{} exceeds the budget {}",
                cfg.p,
                positions.len(),
                cfg.budget
            ))
        })? as u64;
    let n = obj.dim();
    let elements = field.elements().expect("prime field");
    let opts = CheckOptions::sequential_fail_fast();
    let decode = |code: u64| -> Result<LinearMap> {
        let mut rest = code;
        let mut digits = vec![0usize; positions.len()];
        for d in digits.iter_mut().rev() {
            *d = (rest % cfg.p) as usize;
            rest /= cfg.p;
        }
        let entries: Vec<(usize, usize, Scalar)> = positions
            .iter()
            .zip(&digits)
            .filter(|(_, &d)| d != 0)
            .map(|(&(r, c), &d)| (r, c, elements[d].clone()))
            .collect();
        LinearMap::from_entries(n, n, entries)
    };
    // validate the operation name and weight once before the parallel scan
    check_operator_with(
        &obj,
        &LinearMap::zero(n, n),
        cfg.predicate,
        weight.as_ref(),
        cfg.op.as_deref(),
        &opts,
    )?;
    let hits: Vec<u64> = (0..size)
        .into_par_iter()
        .filter(|&code| {
            let m = decode(code).expect("entries in range");
            check_operator_with(&obj, &m, cfg.predicate, weight.as_ref(), cfg.op.as_deref(), &opts)
                .map(|r| r.passed())
                .unwrap_or(false)
        })
        .collect();
    let count = hits.len() as u64;
    let keep = cfg.result_cap.map_or(hits.len(), |c| c.min(hits.len()));
    let maps = hits[..keep].iter().map(|&c| decode(c)).collect::<Result<Vec<_>>>()?;
    Ok(SearchResult {
        maps,
        count,
        enumerated: size,
        truncated: keep < hits.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{GradedBasis, MultilinearOp};
    use crate::grading::{Bicharacter, GradingGroup};

    fn nonabelian() -> GradedAlgebraObject {
        let g = GradingGroup::trivial();
        let basis = GradedBasis::from_degrees(&g, &[("e1", &[]), ("e2", &[])]).unwrap();
        let mut b = MultilinearOp::algebra(2);
        b.add_constant(&[0, 1], 0, &Scalar::one());
        b.add_constant(&[1, 0], 0, &Scalar::from_i64(-1));
        GradedAlgebraObject::new(Field::Rationals, basis, Bicharacter::trivial(g)).with_op("bracket2", b)
    }

    #[test]
    fn nonabelian_subspaces() {
        let s = structure_subspaces(&nonabelian()).unwrap();
        assert!(s.leibniz_kernel.is_zero());
        assert!(s.right_center.is_zero());
        assert!(s.left_center.is_zero());
    }

    #[test]
    fn nonabelian_centroid_is_scalars() {
        let c = centroid_space(&nonabelian(), 2).unwrap();
        assert_eq!(c, vec![LinearMap::identity(2)]);
    }
}
