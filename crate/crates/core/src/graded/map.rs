use crate::error::{Error, Result};
use crate::linalg;
use crate::report::{AxiomReport, Value, Witness};
use crate::scalar::{Field, Scalar};

use super::{GradedBasis, Vector};

/// Linear map given column by column: `columns[c]` is the image of `e_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    columns: Vec<Vector>,
}

/// Maps used as operators are required to be even; the type is shared.
pub type EvenLinearMap = LinearMap;

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            columns: vec![Vector::zero(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::scalar(n, &Scalar::one())
    }

    /// Homothety `c * id`.
    pub fn scalar(n: usize, c: &Scalar) -> Self {
        LinearMap {
            rows: n,
            columns: (0..n).map(|i| Vector::term(i, c.clone())).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<Vector>) -> Result<Self> {
        if columns.iter().any(|c| c.max_index().is_some_and(|m| m >= rows)) {
            return Err(Error::input("map column has an entry outside its row range"));
        }
        Ok(LinearMap { rows, columns })
    }

    /// From `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut m = LinearMap::zero(rows, cols);
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::input(format!("map entry ({r},{c}) out of range")));
            }
            m.columns[c].add_term(r, &v);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols()
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(r)
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: Scalar) {
        let cur = self.columns[c].get(r);
        self.columns[c].add_term(r, &(&v - &cur));
    }

    pub fn column(&self, c: usize) -> &Vector {
        &self.columns[c]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vector::is_zero)
    }

    /// Nonzero entries sorted by `(row, col)`.
    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out: Vec<(usize, usize, Scalar)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r, c, v.clone())))
            .collect();
        out.sort_by_key(|&(r, c, _)| (r, c));
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (c, x) in v.iter() {
            out.axpy(x, &self.columns[c]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols(), other.rows, "composition shape mismatch");
        LinearMap {
            rows: self.rows,
            columns: other.columns.iter().map(|col| self.apply(col)).collect(),
        }
    }

    pub fn plus(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        LinearMap {
            rows: self.rows,
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            rows: self.rows,
            columns: self.columns.iter().map(|v| v.scaled(c)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let dense: Vec<Vec<Scalar>> = self.columns.iter().map(|c| c.to_dense(self.rows)).collect();
        linalg::rank(&dense)
    }

    /// Full column rank.
    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols()
    }

    pub fn to_field(&self, field: Field) -> Result<LinearMap> {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                let mut v = Vector::zero();
                for (i, c) in col.iter() {
                    v.add_term(i, &field.coerce(c)?);
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearMap {
            rows: self.rows,
            columns,
        })
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &LinearMap) -> LinearMap {
        let shift = self.rows;
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().map(|c| c.reindex(|i| i + shift)));
        LinearMap {
            rows: self.rows + other.rows,
            columns,
        }
    }

    /// Records every nonzero entry joining basis vectors of different degrees.
    pub fn even_report(&self, row_basis: &GradedBasis, col_basis: &GradedBasis, report: &mut AxiomReport) {
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                report.record(
                    || Witness {
                        equation: "even".into(),
                        tuple: vec![r, c],
                        lhs: Value::Scalar(v.clone()),
                        rhs: Value::Scalar(Scalar::zero()),
                    },
                    row_basis.degree(r) == col_basis.degree(c),
                );
            }
        }
    }

    pub fn is_even(&self, row_basis: &GradedBasis, col_basis: &GradedBasis) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(c, col)| col.support().all(|r| row_basis.degree(r) == col_basis.degree(c)))
    }
}

/// Evenness of an endomorphism of `basis`; witnesses are `(row, col)` pairs.
pub fn map_check_even(m: &LinearMap, basis: &GradedBasis) -> Result<AxiomReport> {
    if m.rows() != basis.len() || m.cols() != basis.len() {
        return Err(Error::input(format!(
            "map is {}x{}, basis has {} elements",
            m.rows(),
            m.cols(),
            basis.len()
        )));
    }
    let mut report = AxiomReport::new(basis.names());
    m.even_report(basis, basis, &mut report);
    Ok(report)
}
