//! Exact scalars of the form `(a + b*sqrt(delta)) / 2`.
//!
//! These are the values taken by split characters of the alternating group.
//! The radicand is kept squarefree (possibly negative) and normalized to 1
//! whenever the surd coefficient vanishes. Sums mixing two different
//! nontrivial radicands are rejected; they never arise on a single
//! conjugacy class.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `(a + b*sqrt(delta)) / 2` with integer `a`, `b` and squarefree `delta`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadValue {
    a: BigInt,
    b: BigInt,
    delta: i64,
}

/// Splits `d` as `s * f^2` with `s` squarefree (sign kept on `s`).
pub fn squarefree_part(d: i64) -> (i64, i64) {
    if d == 0 {
        return (0, 0);
    }
    let sign = d.signum();
    let mut rest = d.abs();
    let mut square_root = 1i64;
    let mut squarefree = 1i64;
    let mut p = 2i64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square_root *= p;
        }
        if e % 2 == 1 {
            squarefree *= p;
        }
        p += 1;
    }
    squarefree *= rest;
    (sign * squarefree, square_root)
}

impl QuadValue {
    /// Raw constructor; normalizes `delta := 1` when `b = 0` and extracts
    /// the square part of the radicand otherwise.
    pub fn new(a: BigInt, b: BigInt, delta: i64) -> Result<Self> {
        if b.is_zero() {
            return Ok(QuadValue {
                a,
                b,
                delta: 1,
            });
        }
        if delta == 0 {
            return Ok(QuadValue {
                a,
                b: BigInt::zero(),
                delta: 1,
            });
        }
        let (s, f) = squarefree_part(delta);
        if s == 1 {
            return Ok(QuadValue {
                a: a + b * BigInt::from(f),
                b: BigInt::zero(),
                delta: 1,
            });
        }
        Ok(QuadValue {
            a,
            b: b * BigInt::from(f),
            delta: s,
        })
    }

    pub fn zero() -> Self {
        QuadValue {
            a: BigInt::zero(),
            b: BigInt::zero(),
            delta: 1,
        }
    }

    pub fn from_integer<T: Into<BigInt>>(v: T) -> Self {
        QuadValue {
            a: v.into() * 2,
            b: BigInt::zero(),
            delta: 1,
        }
    }

    /// The value `a / 2` (used for the half-integer restriction values).
    pub fn from_half<T: Into<BigInt>>(a: T) -> Self {
        QuadValue {
            a: a.into(),
            b: BigInt::zero(),
            delta: 1,
        }
    }

    pub fn numerator_a(&self) -> &BigInt {
        &self.a
    }

    pub fn numerator_b(&self) -> &BigInt {
        &self.b
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value `a/2` when the surd part vanishes.
    pub fn rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(self.a.clone(), BigInt::from(2)))
        } else {
            None
        }
    }

    /// The integer value, when the value is a rational integer.
    pub fn integer(&self) -> Option<BigInt> {
        if !self.is_rational() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(&self.a, &BigInt::from(2));
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Complex conjugation: flips the surd part for negative radicands and
    /// fixes real values.
    pub fn conj(&self) -> QuadValue {
        if self.delta < 0 {
            QuadValue {
                a: self.a.clone(),
                b: -self.b.clone(),
                delta: self.delta,
            }
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> QuadValue {
        QuadValue {
            a: -self.a.clone(),
            b: -self.b.clone(),
            delta: self.delta,
        }
    }

    fn common_delta(&self, other: &QuadValue) -> Result<i64> {
        if self.b.is_zero() {
            Ok(other.delta)
        } else if other.b.is_zero() || self.delta == other.delta {
            Ok(self.delta)
        } else {
            Err(Error::IncompatibleRadicands(self.delta, other.delta))
        }
    }

    pub fn checked_add(&self, other: &QuadValue) -> Result<QuadValue> {
        let delta = self.common_delta(other)?;
        QuadValue::new(&self.a + &other.a, &self.b + &other.b, delta)
    }

    pub fn checked_sub(&self, other: &QuadValue) -> Result<QuadValue> {
        self.checked_add(&other.neg())
    }

    /// Product, which must land back in the half-integer ring.
    pub fn checked_mul(&self, other: &QuadValue) -> Result<QuadValue> {
        let delta = self.common_delta(other)?;
        let rational_part = &self.a * &other.a + &self.b * &other.b * BigInt::from(delta);
        let surd_part = &self.a * &other.b + &self.b * &other.a;
        let two = BigInt::from(2);
        let (qa, ra) = num_integer::Integer::div_rem(&rational_part, &two);
        let (qb, rb) = num_integer::Integer::div_rem(&surd_part, &two);
        if !ra.is_zero() || !rb.is_zero() {
            return Err(Error::NotRepresentable);
        }
        QuadValue::new(qa, qb, delta)
    }

    /// `self * conj(other)` as an exact pair (rational part, surd
    /// coefficient) over the common radicand, without the denominator-2
    /// representability restriction.
    pub fn mul_conj_parts(&self, other: &QuadValue) -> Result<(BigRational, i64, BigRational)> {
        let delta = self.common_delta(other)?;
        let other = other.conj();
        let four = BigInt::from(4);
        let rational =
            BigRational::new(&self.a * &other.a + &self.b * &other.b * BigInt::from(delta), four.clone());
        let surd = BigRational::new(&self.a * &other.b + &self.b * &other.a, four);
        Ok((rational, delta, surd))
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if (&self.a % 2u8).is_zero() {
                return write!(f, "{}", &self.a / 2);
            }
            return write!(f, "{}/2", self.a);
        }
        let b_str = if self.b == BigInt::one() {
            String::new()
        } else if self.b == BigInt::from(-1) {
            "-".to_string()
        } else {
            self.b.to_string()
        };
        if self.a.is_zero() {
            write!(f, "{}sqrt({})/2", b_str, self.delta)
        } else {
            let sign = if self.b.is_negative() { "" } else { "+" };
            write!(f, "({}{}{}sqrt({}))/2", self.a, sign, b_str, self.delta)
        }
    }
}

impl fmt::Debug for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadValue({self})")
    }
}

fn bigint_to_i64<E: serde::ser::Error>(v: &BigInt) -> std::result::Result<i64, E> {
    i64::try_from(v).map_err(|_| E::custom("value outside i64 range"))
}

impl Serialize for QuadValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("QuadValue", 4)?;
        st.serialize_field("a", &bigint_to_i64::<S::Error>(&self.a)?)?;
        st.serialize_field("b", &bigint_to_i64::<S::Error>(&self.b)?)?;
        st.serialize_field("delta", &self.delta)?;
        st.serialize_field("den", &2u8)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct QuadValueWire {
    a: i64,
    b: i64,
    delta: i64,
    #[serde(default = "two")]
    den: u8,
}

fn two() -> u8 {
    2
}

impl<'de> Deserialize<'de> for QuadValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = QuadValueWire::deserialize(deserializer)?;
        if wire.den != 2 {
            return Err(D::Error::custom("denominator must be 2"));
        }
        QuadValue::new(BigInt::from(wire.a), BigInt::from(wire.b), wire.delta)
            .map_err(D::Error::custom)
    }
}

/// Accumulator for sums of products of `QuadValue`s: a rational part plus
/// rational coefficients of `sqrt(delta)` per squarefree radicand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSum {
    rational: BigRational,
    surds: BTreeMap<i64, BigRational>,
}

impl QuadSum {
    pub fn zero() -> Self {
        QuadSum {
            rational: BigRational::zero(),
            surds: BTreeMap::new(),
        }
    }

    pub fn add_rational(&mut self, r: &BigRational) {
        self.rational += r;
    }

    pub fn add_surd(&mut self, delta: i64, coeff: BigRational) {
        if delta == 1 || coeff.is_zero() {
            self.rational += coeff;
            return;
        }
        let entry = self.surds.entry(delta).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.surds.remove(&delta);
        }
    }

    /// Adds `scale * x * conj(y)`.
    pub fn add_product(
        &mut self,
        x: &QuadValue,
        y: &QuadValue,
        scale: &BigRational,
    ) -> Result<()> {
        let (rational, delta, surd) = x.mul_conj_parts(y)?;
        self.rational += rational * scale;
        self.add_surd(delta, surd * scale);
        Ok(())
    }

    pub fn is_rational(&self) -> bool {
        self.surds.is_empty()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    /// The exact rational value, provided every surd coefficient cancelled.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.rational)
        } else {
            None
        }
    }
}
