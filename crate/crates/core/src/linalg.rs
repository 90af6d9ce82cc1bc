//! Dense exact Gaussian elimination and canonical subspaces.

use crate::graded::Vector;
use crate::scalar::Scalar;

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of equal-length vectors.
pub fn rank(vectors: &[Vec<Scalar>]) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m).len()
}

/// Basis of `{v : m v = 0}` for `m` with `n` columns, one vector per free column.
pub fn nullspace(m: &[Vec<Scalar>], n: usize) -> Vec<Vec<Scalar>> {
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let pivots = rref(&mut a);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -&a[k][f];
            }
            v
        })
        .collect()
}

/// A subspace of `K^n` stored as its reduced echelon basis (pivots normalized
/// to 1, pivot columns increasing), so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: vec![],
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(Vector::unit))
    }

    pub fn span_dense(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let mut m = vectors;
        let pivots = rref(&mut m);
        m.truncate(pivots.len());
        Subspace {
            ambient,
            rows: m,
            pivots,
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        Subspace::span_dense(ambient, vectors.into_iter().map(|v| v.to_dense(ambient)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|r| Vector::from_dense(r)).collect()
    }

    pub fn dense_basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut r = v.to_dense(self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        r.iter().all(Scalar::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    /// Linear functionals vanishing on the subspace.
    fn annihilator(&self) -> Vec<Vec<Scalar>> {
        nullspace(&self.rows, self.ambient)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let mut constraints = self.annihilator();
        constraints.extend(other.annihilator());
        Subspace::span_dense(self.ambient, nullspace(&constraints, self.ambient))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::span_dense(self.ambient, rows)
    }

    /// The solution set of `m v = 0`.
    pub fn kernel_of(m: &[Vec<Scalar>], ambient: usize) -> Subspace {
        Subspace::span_dense(ambient, nullspace(m, ambient))
    }

    pub fn render(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self.basis().iter().map(|v| v.render(labels)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![vec![q(1), q(2), q(3)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = &(&(&q(1) * &v[0]) + &(&q(2) * &v[1])) + &(&q(3) * &v[2]);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn canonical_form_ignores_spanning_set() {
        let a = Subspace::span(3, [Vector::from_dense(&[q(2), q(4), q(0)]), Vector::unit(2)]);
        let b = Subspace::span(
            3,
            [
                Vector::from_dense(&[q(1), q(2), q(1)]),
                Vector::from_dense(&[q(1), q(2), q(-1)]),
            ],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection() {
        let a = Subspace::span(3, [Vector::unit(0), Vector::unit(1)]);
        let b = Subspace::span(3, [Vector::unit(1), Vector::unit(2)]);
        assert_eq!(a.intersect(&b), Subspace::span(3, [Vector::unit(1)]));
        assert!(Subspace::zero(3).is_subspace_of(&a));
        assert_eq!(a.sum(&b), Subspace::full(3));
    }
}
