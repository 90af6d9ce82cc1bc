use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::grading::{GradingGroup, GroupElement};

use super::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry {
    pub name: String,
    pub degree: GroupElement,
}

/// Ordered homogeneous basis `e_0, ..., e_{n-1}` with degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    group: GradingGroup,
    entries: Vec<BasisEntry>,
}

impl GradedBasis {
    pub fn new(group: GradingGroup, entries: Vec<BasisEntry>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &entries {
            if !seen.insert(e.name.as_str()) {
                return Err(Error::input(format!("duplicate basis name {:?}", e.name)));
            }
            if !group.contains(&e.degree) {
                return Err(Error::input(format!("degree of {:?} is not in {group}", e.name)));
            }
        }
        Ok(GradedBasis { group, entries })
    }

    /// Convenience constructor from names and raw degree coordinates.
    pub fn from_degrees(group: &GradingGroup, layout: &[(&str, &[i64])]) -> Result<Self> {
        let entries = layout
            .iter()
            .map(|(n, d)| {
                Ok(BasisEntry {
                    name: n.to_string(),
                    degree: group.element(d)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GradedBasis::new(group.clone(), entries)
    }

    pub fn empty(group: GradingGroup) -> Self {
        GradedBasis { group, entries: vec![] }
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn name(&self, i: usize) -> &str {
        &self.entries[i].name
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.entries[i].degree
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.name == name)
    }

    /// Degree shared by every basis vector in the support, if any.
    pub fn degree_of(&self, v: &Vector) -> Option<GroupElement> {
        let mut it = v.support().map(|i| self.degree(i));
        let first = it.next()?.clone();
        it.all(|d| *d == first).then_some(first)
    }

    /// Sum of the degrees of the listed basis vectors.
    pub fn degree_sum(&self, idx: &[usize]) -> GroupElement {
        idx.iter().fold(self.group.zero(), |acc, &i| &acc + self.degree(i))
    }

    /// Basis indices grouped by degree.
    pub fn blocks(&self) -> BTreeMap<GroupElement, Vec<usize>> {
        let mut out: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.entries.iter().enumerate() {
            out.entry(e.degree.clone()).or_default().push(i);
        }
        out
    }

    /// Positions `(row, col)` an even map may occupy, row-major.
    pub fn even_positions(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .filter(|&(r, c)| self.degree(r) == self.degree(c))
            .collect()
    }

    /// `self` followed by `other`; names get the given prefixes.
    pub fn concat(&self, other: &GradedBasis, prefixes: (&str, &str)) -> Result<GradedBasis> {
        if self.group != other.group {
            return Err(Error::input("bases are graded by different groups"));
        }
        let entries = self
            .entries
            .iter()
            .map(|e| (prefixes.0, e))
            .chain(other.entries.iter().map(|e| (prefixes.1, e)))
            .map(|(p, e)| BasisEntry {
                name: format!("{p}{}", e.name),
                degree: e.degree.clone(),
            })
            .collect();
        GradedBasis::new(self.group.clone(), entries)
    }

    /// Pair basis `a⊗b`, left factor major, degrees added.
    pub fn tensor(&self, other: &GradedBasis) -> Result<GradedBasis> {
        if self.group != other.group {
            return Err(Error::input("bases are graded by different groups"));
        }
        let mut entries = Vec::with_capacity(self.len() * other.len());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(BasisEntry {
                    name: format!("{}⊗{}", a.name, b.name),
                    degree: &a.degree + &b.degree,
                });
            }
        }
        GradedBasis::new(self.group.clone(), entries)
    }
}

/// An element with an optional asserted degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    pub coeffs: Vector,
    pub declared_degree: Option<GroupElement>,
}

impl GradedElement {
    pub fn new(coeffs: Vector) -> Self {
        GradedElement {
            coeffs,
            declared_degree: None,
        }
    }

    /// Fails unless every nonzero coefficient sits on a basis vector of degree `deg`.
    pub fn homogeneous(basis: &GradedBasis, coeffs: Vector, deg: GroupElement) -> Result<Self> {
        if let Some(i) = coeffs.support().find(|&i| i >= basis.len() || *basis.degree(i) != deg) {
            return Err(Error::input(format!(
                "coefficient on index {i} breaks homogeneity of degree {deg}"
            )));
        }
        Ok(GradedElement {
            coeffs,
            declared_degree: Some(deg),
        })
    }

    pub fn basis(basis: &GradedBasis, i: usize) -> Self {
        GradedElement {
            coeffs: Vector::unit(i),
            declared_degree: Some(basis.degree(i).clone()),
        }
    }
}
