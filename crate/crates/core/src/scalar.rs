//! Scalar fields the algebra is built over.
//!
//! Two realizations are provided: [`Rational`] (arbitrary-precision, always
//! reduced, the reference semantics) and `f64` (best-effort binary64).

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar: arbitrary-precision numerator/denominator,
/// always reduced, denominator positive.
pub type Rational = BigRational;

/// Abstract scalar field used by every operation in the crate.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact and equality is decidable.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;

    /// Exact quotient `n/d`, `d > 0`.
    fn from_ratio(n: i64, d: i64) -> Self;

    /// Parse an unsigned numeric literal: `12`, `3/4`, or (float realization
    /// only) `2.5`. Returns `None` when the literal is not admissible in this
    /// field.
    fn parse_literal(text: &str) -> Option<Self>;

    fn to_f64(&self) -> f64;

    fn is_negative(&self) -> bool;

    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d > 0, "denominator must be positive");
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn parse_literal(text: &str) -> Option<Self> {
        if text.contains('.') {
            // decimals are an explicit opt-in to the float field
            return None;
        }
        match text.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n).ok()?;
                let d = BigInt::from_str(d).ok()?;
                if d.is_zero() || d.is_negative() {
                    return None;
                }
                Some(BigRational::new(n, d))
            }
            None => Some(BigRational::from_integer(BigInt::from_str(text).ok()?)),
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d > 0, "denominator must be positive");
        n as f64 / d as f64
    }

    fn parse_literal(text: &str) -> Option<Self> {
        if let Some((n, d)) = text.split_once('/') {
            let n = f64::from_str(n).ok()?;
            let d = f64::from_str(d).ok()?;
            if d <= 0.0 {
                return None;
            }
            return Some(n / d);
        }
        f64::from_str(text).ok()
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negative(&self) -> bool {
        *self < 0.0
    }
}
