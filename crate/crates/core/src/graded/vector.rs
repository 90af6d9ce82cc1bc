use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

/// Sparse coordinate vector over some basis; zero coordinates are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector {
    entries: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector::default()
    }

    pub fn unit(i: usize) -> Self {
        Vector::term(i, Scalar::one())
    }

    pub fn term(i: usize, c: Scalar) -> Self {
        let mut v = Vector::zero();
        v.add_term(i, &c);
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(pairs: I) -> Self {
        let mut v = Vector::zero();
        for (i, c) in pairs {
            v.add_term(i, &c);
        }
        v
    }

    /// Dense coefficients `coeffs[i]` on `e_i`.
    pub fn from_dense(coeffs: &[Scalar]) -> Self {
        Vector::from_pairs(coeffs.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for (&i, c) in &self.entries {
            out[i] = c.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.entries.get(&i).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> Option<&Scalar> {
        self.entries.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// `self[i] += c`.
    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.entries.remove(&i);
                }
            }
            None => {
                self.entries.insert(i, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (&i, v) in &other.entries {
            self.add_term(i, &(c * v));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            entries: self.entries.iter().map(|(&i, v)| (i, c * v)).collect(),
        }
    }

    /// Relabels coordinates: `e_i -> e_{f(i)}`.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> Vector {
        Vector::from_pairs(self.entries.iter().map(|(&i, c)| (f(i), c.clone())))
    }

    /// Keeps coordinates in `range`, shifted down by `range.start`.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Vector {
        Vector {
            entries: self
                .entries
                .range(range.clone())
                .map(|(&i, c)| (i - range.start, c.clone()))
                .collect(),
        }
    }

    pub fn map_scalars(&self, f: impl Fn(&Scalar) -> Scalar) -> Vector {
        Vector::from_pairs(self.entries.iter().map(|(&i, c)| (i, f(c))))
    }

    /// Human-readable form such as `e1 - 2*e3`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (&i, c)) in self.entries.iter().enumerate() {
            let name = labels.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
            let neg = matches!(c.partial_cmp(&Scalar::zero()), Some(std::cmp::Ordering::Less));
            let mag = if neg { -c } else { c.clone() };
            let sep = match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sep);
            if mag.is_one() {
                out.push_str(&name);
            } else {
                out.push_str(&format!("{mag}*{name}"));
            }
        }
        out
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.axpy(&Scalar::from_i64(-1), rhs);
        out
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scaled(&Scalar::from_i64(-1))
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_entries() {
        let mut v = Vector::term(2, Scalar::from_i64(3));
        v.add_term(2, &Scalar::from_i64(-3));
        assert!(v.is_zero());
        assert_eq!(v, Vector::zero());
    }

    #[test]
    fn rendering() {
        let labels: Vec<String> = ["e1", "e2", "e3"].iter().map(|s| s.to_string()).collect();
        let v = Vector::from_pairs([(0, Scalar::one()), (2, Scalar::from_i64(-2))]);
        assert_eq!(v.render(&labels), "e1 - 2*e3");
        assert_eq!((-&v).render(&labels), "-e1 + 2*e3");
        assert_eq!(Vector::term(1, Scalar::ratio(1, 2)).render(&labels), "1/2*e2");
    }
}
