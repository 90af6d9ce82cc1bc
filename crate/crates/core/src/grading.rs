//! Finitely generated abelian grading groups and skew-symmetric bicharacters.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::{AxiomReport, Value, Witness};
use crate::scalar::{Field, Scalar};

/// `Z^r x Z_{m_1} x ... x Z_{m_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    free_rank: usize,
    torsion: Vec<u64>,
    // Per-coordinate modulus, 0 for free coordinates.
    moduli: Arc<[u64]>,
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(m) = torsion.iter().find(|&&m| m < 2) {
            return Err(Error::input(format!("torsion order {m} is below 2")));
        }
        let moduli: Vec<u64> = std::iter::repeat_n(0, free_rank)
            .chain(torsion.iter().copied())
            .collect();
        Ok(GradingGroup {
            free_rank,
            torsion,
            moduli: moduli.into(),
        })
    }

    pub fn trivial() -> Self {
        GradingGroup::new(0, vec![]).unwrap()
    }

    pub fn z2() -> Self {
        GradingGroup::new(0, vec![2]).unwrap()
    }

    pub fn z2n(n: usize) -> Self {
        GradingGroup::new(0, vec![2; n]).unwrap()
    }

    pub fn zxz() -> Self {
        GradingGroup::new(2, vec![]).unwrap()
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of canonical generators (coordinates).
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.rank()],
            moduli: self.moduli.clone(),
        }
    }

    /// Builds an element, reducing torsion coordinates into `[0, m)`.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::input(format!(
                "degree has {} coordinates, group needs {}",
                coords.len(),
                self.rank()
            )));
        }
        Ok(GroupElement::canonical(coords.to_vec(), self.moduli.clone()))
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        GroupElement::canonical(c, self.moduli.clone())
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.moduli == self.moduli
    }

    /// Order of generator `i`, `None` when it is free.
    pub fn generator_order(&self, i: usize) -> Option<u64> {
        match self.moduli[i] {
            0 => None,
            m => Some(m),
        }
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec!["Z".into(); self.free_rank];
        parts.extend(self.torsion.iter().map(|m| format!("Z{m}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("x"))
        }
    }
}

/// A degree; torsion coordinates are kept in canonical range.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<i64>,
    moduli: Arc<[u64]>,
}

impl GroupElement {
    fn canonical(mut coords: Vec<i64>, moduli: Arc<[u64]>) -> Self {
        for (c, &m) in coords.iter_mut().zip(moduli.iter()) {
            if m != 0 {
                *c = c.rem_euclid(m as i64);
            }
        }
        GroupElement { coords, moduli }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn zip_with(&self, other: &GroupElement, f: impl Fn(i64, i64) -> i64) -> GroupElement {
        assert_eq!(self.moduli, other.moduli, "degrees from different grading groups");
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| f(a, b)).collect();
        GroupElement::canonical(coords, self.moduli.clone())
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        let coords = self.coords.iter().map(|c| -c).collect();
        GroupElement::canonical(coords, self.moduli.clone())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Named standard bicharacters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// `Z_2`, `(-1)^{ij}`. Also models `{-1,+1}` written multiplicatively.
    Z2,
    /// `Z_2^n`, `(-1)^{sum a_i b_i}`.
    Z2n,
    /// `Z_2 x Z_2`, `(-1)^{i1 j2 - i2 j1}`.
    Z2xZ2,
    /// `Z x Z`, `(-1)^{(i1+i2)(j1+j2)}`.
    ZxZ,
}

impl Builtin {
    pub fn as_str(self) -> &'static str {
        match self {
            Builtin::Z2 => "Z2",
            Builtin::Z2n => "Z2n",
            Builtin::Z2xZ2 => "Z2xZ2",
            Builtin::ZxZ => "ZxZ",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "Z2" => Builtin::Z2,
            "Z2n" => Builtin::Z2n,
            "Z2xZ2" => Builtin::Z2xZ2,
            "ZxZ" => Builtin::ZxZ,
            _ => return Err(Error::input(format!("unknown builtin bicharacter {s:?}"))),
        })
    }
}

/// `eps: G x G -> K*`, stored by its values on pairs of canonical generators
/// and extended multiplicatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    group: GradingGroup,
    table: Vec<Vec<Scalar>>,
    builtin: Option<Builtin>,
}

impl Bicharacter {
    /// Generator-table form. Only the shape is checked here; see [`Bicharacter::validate`].
    pub fn new(group: GradingGroup, table: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = group.rank();
        if table.len() != r || table.iter().any(|row| row.len() != r) {
            return Err(Error::input(format!("generator table must be {r}x{r}")));
        }
        Ok(Bicharacter {
            group,
            table,
            builtin: None,
        })
    }

    pub fn trivial(group: GradingGroup) -> Self {
        let r = group.rank();
        Bicharacter {
            group,
            table: vec![vec![Scalar::one(); r]; r],
            builtin: None,
        }
    }

    /// Standard example on its natural group; `Z2n` uses `group` to fix `n`.
    pub fn builtin(kind: Builtin, group: &GradingGroup) -> Result<Self> {
        let mismatch = || Error::input(format!("builtin {} does not live on {group}", kind.as_str()));
        let neg = || Scalar::from_i64(-1);
        let one = Scalar::one;
        let table = match kind {
            Builtin::Z2 => {
                if *group != GradingGroup::z2() {
                    return Err(mismatch());
                }
                vec![vec![neg()]]
            }
            Builtin::Z2n => {
                if group.free_rank() != 0 || group.torsion().is_empty() || group.torsion().iter().any(|&m| m != 2) {
                    return Err(mismatch());
                }
                let n = group.rank();
                (0..n)
                    .map(|i| (0..n).map(|j| if i == j { neg() } else { one() }).collect())
                    .collect()
            }
            Builtin::Z2xZ2 => {
                if *group != GradingGroup::z2n(2) {
                    return Err(mismatch());
                }
                vec![vec![one(), neg()], vec![neg(), one()]]
            }
            Builtin::ZxZ => {
                if *group != GradingGroup::zxz() {
                    return Err(mismatch());
                }
                vec![vec![neg(), neg()], vec![neg(), neg()]]
            }
        };
        Ok(Bicharacter {
            group: group.clone(),
            table,
            builtin: Some(kind),
        })
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn table(&self) -> &[Vec<Scalar>] {
        &self.table
    }

    pub fn builtin_kind(&self) -> Option<Builtin> {
        self.builtin
    }

    /// `prod_{i,j} B[i][j]^{a_i b_j}`.
    pub fn eval(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        let mut acc = Scalar::one();
        for (i, &ai) in a.coords.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coords.iter().enumerate() {
                let e = ai * bj;
                if e != 0 {
                    acc = &acc * &self.table[i][j].pow(e);
                }
            }
        }
        acc
    }

    /// Checks skew-symmetry and torsion compatibility on generator pairs.
    pub fn validate(&self) -> Result<AxiomReport> {
        let r = self.group.rank();
        let labels: Vec<String> = (0..r).map(|i| format!("g{i}")).collect();
        let mut report = AxiomReport::new(labels);
        for i in 0..r {
            for j in 0..r {
                if self.table[i][j].is_zero() {
                    return Err(Error::input(format!("bicharacter entry ({i},{j}) is zero")));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                let prod = &self.table[i][j] * &self.table[j][i];
                report.record(
                    || Witness {
                        equation: "skew_symmetry".into(),
                        tuple: vec![i, j],
                        lhs: Value::Scalar(prod.clone()),
                        rhs: Value::Scalar(Scalar::one()),
                    },
                    prod.is_one(),
                );
                if let Some(m) = self.group.generator_order(i) {
                    for (a, b) in [(i, j), (j, i)] {
                        let v = self.table[a][b].pow(m as i64);
                        report.record(
                            || Witness {
                                equation: format!("torsion_order_{m}"),
                                tuple: vec![a, b],
                                lhs: Value::Scalar(v.clone()),
                                rhs: Value::Scalar(Scalar::one()),
                            },
                            v.is_one(),
                        );
                    }
                }
            }
        }
        Ok(report)
    }

    /// The same bicharacter with values moved into `field`.
    pub fn to_field(&self, field: Field) -> Result<Self> {
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|v| field.coerce(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if table.iter().flatten().any(Scalar::is_zero) {
            return Err(Error::input(format!("bicharacter degenerates in {field}")));
        }
        Ok(Bicharacter {
            group: self.group.clone(),
            table,
            builtin: self.builtin,
        })
    }
}

/// Checked evaluation: both degrees must belong to the bicharacter's group.
pub fn bicharacter_eval(bc: &Bicharacter, a: &GroupElement, b: &GroupElement) -> Result<Scalar> {
    if !bc.group.contains(a) || !bc.group.contains(b) {
        return Err(Error::input("degree does not belong to the bicharacter's group"));
    }
    Ok(bc.eval(a, b))
}

pub fn bicharacter_validate(bc: &Bicharacter) -> Result<AxiomReport> {
    bc.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &GradingGroup, c: &[i64]) -> GroupElement {
        g.element(c).unwrap()
    }

    #[test]
    fn torsion_is_canonicalized() {
        let g = GradingGroup::new(1, vec![3]).unwrap();
        assert_eq!(el(&g, &[-2, 5]).coords(), &[-2, 2]);
        assert_eq!(&el(&g, &[1, 2]) + &el(&g, &[1, 2]), el(&g, &[2, 1]));
        assert!((&el(&g, &[4, 1]) - &el(&g, &[4, 4])).is_zero());
    }

    #[test]
    fn standard_examples() {
        let z2 = GradingGroup::z2();
        let e = Bicharacter::builtin(Builtin::Z2, &z2).unwrap();
        assert_eq!(e.eval(&el(&z2, &[1]), &el(&z2, &[1])), Scalar::from_i64(-1));
        assert!(e.eval(&z2.zero(), &el(&z2, &[1])).is_one());

        let k = GradingGroup::z2n(2);
        let e = Bicharacter::builtin(Builtin::Z2xZ2, &k).unwrap();
        assert_eq!(e.eval(&el(&k, &[1, 0]), &el(&k, &[0, 1])), Scalar::from_i64(-1));

        let zz = GradingGroup::zxz();
        let e = Bicharacter::builtin(Builtin::ZxZ, &zz).unwrap();
        assert_eq!(e.eval(&el(&zz, &[1, 0]), &el(&zz, &[0, 1])), Scalar::from_i64(-1));
    }

    #[test]
    fn closed_forms_on_small_ranges() {
        let sign = |k: i64| Scalar::from_i64(if k.rem_euclid(2) == 0 { 1 } else { -1 });
        let zz = GradingGroup::zxz();
        let e = Bicharacter::builtin(Builtin::ZxZ, &zz).unwrap();
        for i1 in -3..=3 {
            for i2 in -3..=3 {
                for j1 in -3..=3 {
                    for j2 in -3..=3 {
                        let v = e.eval(&el(&zz, &[i1, i2]), &el(&zz, &[j1, j2]));
                        assert_eq!(v, sign((i1 + i2) * (j1 + j2)));
                    }
                }
            }
        }
        let k = GradingGroup::z2n(2);
        let e = Bicharacter::builtin(Builtin::Z2xZ2, &k).unwrap();
        let n = Bicharacter::builtin(Builtin::Z2n, &k).unwrap();
        for i1 in -3..=3 {
            for i2 in -3..=3 {
                for j1 in -3..=3 {
                    for j2 in -3..=3 {
                        let (a, b) = (el(&k, &[i1, i2]), el(&k, &[j1, j2]));
                        assert_eq!(e.eval(&a, &b), sign(i1 * j2 - i2 * j1));
                        assert_eq!(n.eval(&a, &b), sign(i1 * j1 + i2 * j2));
                    }
                }
            }
        }
    }

    #[test]
    fn validation_verdicts() {
        let z2 = GradingGroup::z2();
        assert!(Bicharacter::builtin(Builtin::Z2, &z2)
            .unwrap()
            .validate()
            .unwrap()
            .passed());
        let triv = Bicharacter::new(z2.clone(), vec![vec![Scalar::one()]]).unwrap();
        assert!(triv.validate().unwrap().passed());
        let two = Bicharacter::new(z2.clone(), vec![vec![Scalar::from_i64(2)]]).unwrap();
        let rep = two.validate().unwrap();
        assert!(!rep.passed());
        let ids: Vec<&str> = rep.witnesses.iter().map(|w| w.equation.as_str()).collect();
        assert!(ids.contains(&"skew_symmetry"));
        assert!(ids.contains(&"torsion_order_2"));
        let zero = Bicharacter::new(z2, vec![vec![Scalar::zero()]]).unwrap();
        assert!(zero.validate().is_err());
    }

    #[test]
    fn eval_rejects_foreign_degrees() {
        let e = Bicharacter::builtin(Builtin::Z2, &GradingGroup::z2()).unwrap();
        let other = GradingGroup::zxz().zero();
        assert!(bicharacter_eval(&e, &other, &other).is_err());
    }
}
