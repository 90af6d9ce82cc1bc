//! Exact scalars: arbitrary-precision rationals and prime-field residues.
//!
//! A [`Scalar`] is one of the two. Values from different fields never meet in
//! well-formed objects, with one exception: small rational constants (signs,
//! weights, `1`) are freely combined with residues and are reduced into the
//! residue's field on contact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field of an object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => Scalar::Prime(PrimeElem::new(v.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// Parses a canonical scalar string (`"n"` or `"n/d"`, reduced, `d > 1`).
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let q = parse_canonical_rational(s)?;
        self.from_rational(&q)
    }

    /// Embeds a rational; fails for prime fields when the denominator is
    /// divisible by the characteristic.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => reduce_rational(q, p)
                .map(|v| Scalar::Prime(PrimeElem::new(v, p)))
                .ok_or_else(|| Error::input(format!("{q} is not {p}-integral"))),
        }
    }

    /// Converts a scalar of any field into this one.
    pub fn coerce(self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (_, Scalar::Rational(q)) => self.from_rational(q),
            (Field::Prime(p), Scalar::Prime(e)) if e.modulus == p => Ok(s.clone()),
            (f, Scalar::Prime(e)) => Err(Error::input(format!(
                "cannot move an element of GF({}) into {f}",
                e.modulus
            ))),
        }
    }

    /// All elements in enumeration order `0, 1, ..., p-1`; `None` for the rationals.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..p).map(|v| Scalar::Prime(PrimeElem::new(v, p))).collect()),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_rational(q: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = q.numer().mod_floor(&pb).to_u64()?;
    let den = q.denom().mod_floor(&pb).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den, p), p))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero in GF({p})");
    pow_mod(a, p - 2, p)
}

fn parse_canonical_rational(s: &str) -> Result<BigRational> {
    let bad = |why: &str| Error::input(format!("malformed scalar {s:?}: {why}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected an integer"));
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(bad("leading zero"));
        }
        if t.starts_with('-') && digits == "0" {
            return Err(bad("negative zero"));
        }
        t.parse::<BigInt>().map_err(|_| bad("expected an integer"))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            if d.starts_with('-') {
                return Err(bad("negative denominator"));
            }
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            if d.is_one() {
                return Err(bad("unit denominator"));
            }
            if !n.gcd(&d).is_one() {
                return Err(bad("not in lowest terms"));
            }
            Ok(BigRational::new_raw(n, d))
        }
    }
}

/// Residue class modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeElem {
    value: u64,
    modulus: u64,
}

impl PrimeElem {
    pub fn new(value: u64, modulus: u64) -> Self {
        PrimeElem {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Prime(PrimeElem),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_i64(v: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(v.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime(e) => e.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime(e) => e.value == 1 % e.modulus,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Prime(e) => Field::Prime(e.modulus),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime(e) => Scalar::Prime(PrimeElem::new(inv_mod(e.value, e.modulus), e.modulus)),
        })
    }

    /// Integer power; negative exponents invert. Panics on `0^(-k)`.
    pub fn pow(&self, exp: i64) -> Scalar {
        let base = if exp < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        match base {
            Scalar::Prime(pe) => Scalar::Prime(PrimeElem::new(pow_mod(pe.value, e, pe.modulus), pe.modulus)),
            Scalar::Rational(q) => {
                let mut acc = BigRational::one();
                let mut b = q;
                while e > 0 {
                    if e & 1 == 1 {
                        acc *= &b;
                    }
                    b = &b * &b;
                    e >>= 1;
                }
                Scalar::Rational(acc)
            }
        }
    }

    /// Canonical text form: `"n"` or `"n/d"` for rationals, the residue in
    /// `[0, p)` for prime fields.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime(_) => None,
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_i64(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Prime(e) => write!(f, "{}", e.value),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Field::Rationals.parse(s)
    }
}

// Brings a rational into the residue field of `e`.
fn lift(q: &BigRational, e: PrimeElem) -> PrimeElem {
    let v = reduce_rational(q, e.modulus).unwrap_or_else(|| panic!("{q} has no image in GF({})", e.modulus));
    PrimeElem::new(v, e.modulus)
}

fn combine(
    a: &Scalar,
    b: &Scalar,
    rat: impl FnOnce(&BigRational, &BigRational) -> BigRational,
    md: impl FnOnce(u64, u64, u64) -> u64,
) -> Scalar {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(rat(x, y)),
        (Scalar::Prime(x), Scalar::Prime(y)) => {
            assert_eq!(x.modulus, y.modulus, "mixing residues of different primes");
            Scalar::Prime(PrimeElem::new(md(x.value, y.value, x.modulus), x.modulus))
        }
        (Scalar::Rational(x), Scalar::Prime(y)) => {
            let x = lift(x, *y);
            Scalar::Prime(PrimeElem::new(md(x.value, y.value, y.modulus), y.modulus))
        }
        (Scalar::Prime(x), Scalar::Rational(y)) => {
            let y = lift(y, *x);
            Scalar::Prime(PrimeElem::new(md(x.value, y.value, x.modulus), x.modulus))
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x == y,
            (Scalar::Prime(x), Scalar::Prime(y)) => x == y,
            (Scalar::Rational(q), Scalar::Prime(e)) | (Scalar::Prime(e), Scalar::Rational(q)) => {
                reduce_rational(q, e.modulus) == Some(e.value)
            }
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Some(x.cmp(y)),
            (Scalar::Prime(x), Scalar::Prime(y)) if x.modulus == y.modulus => Some(x.value.cmp(&y.value)),
            _ => None,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        combine(self, rhs, |x, y| x + y, |x, y, p| (x + y) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        combine(self, rhs, |x, y| x - y, |x, y, p| (x + p - y) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        combine(self, rhs, |x, y| x * y, mul_mod)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime(e) => Scalar::Prime(PrimeElem::new(e.modulus - e.value, e.modulus)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let a = Scalar::ratio(2, 4);
        let b = Scalar::ratio(-3, -6);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1/2");
        assert_eq!((&a + &b).to_string(), "1");
        assert_eq!(Scalar::ratio(1, -2).to_string(), "-1/2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(7);
        for v in 1..7 {
            let x = f.from_i64(v);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn mixed_constants_reduce_into_residues() {
        let f = Field::Prime(3);
        let x = f.from_i64(2);
        assert_eq!(&x * &Scalar::from_i64(-1), f.from_i64(1));
        assert_eq!(Scalar::from_i64(-1), f.from_i64(2));
        assert_eq!(&Scalar::ratio(1, 2) + &f.zero(), f.from_i64(2));
    }

    #[test]
    fn negative_powers_invert() {
        let two = Scalar::from_i64(2);
        assert_eq!(two.pow(-3), Scalar::ratio(1, 8));
        assert_eq!(Field::Prime(5).from_i64(2).pow(-1), Field::Prime(5).from_i64(3));
        assert!(Scalar::from_i64(-1).pow(0).is_one());
    }

    #[test]
    fn canonical_parsing() {
        let q = Field::Rationals;
        assert_eq!(q.parse("-3/4").unwrap(), Scalar::ratio(-3, 4));
        assert_eq!(q.parse("5").unwrap(), Scalar::from_i64(5));
        for bad in ["1/0", "2/4", "1/-2", "1.5", "", "-0", "01", "3/1", "x"] {
            assert!(q.parse(bad).is_err(), "{bad} accepted");
        }
        assert_eq!(Field::Prime(3).parse("1/2").unwrap(), Field::Prime(3).from_i64(2));
        assert!(Field::Prime(3).parse("1/3").is_err());
    }
}
