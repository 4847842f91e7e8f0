//! Sparse multivector arithmetic over an abstract scalar field.
//!
//! A multivector is a finite mapping blade -> coefficient with no stored
//! zeros; keys iterate in the canonical grade-lexicographic order.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::blades::{blade_mul, Blade, Signature};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultivectorError {
    #[error("blade {0} is not valid for {1}")]
    InvalidBlade(Blade, Signature),
}

/// Sparse multivector: signature plus a normalized blade -> scalar mapping.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<S: Scalar> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        let mut m = Multivector::zero(sig);
        m.insert(Blade::SCALAR, value);
        m
    }

    pub fn one(sig: Signature) -> Self {
        Multivector::scalar(sig, S::one())
    }

    pub fn basis_blade(sig: Signature, blade: Blade) -> Result<Self, MultivectorError> {
        Multivector::from_terms(sig, [(blade, S::one())])
    }

    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self, MultivectorError>
    where
        I: IntoIterator<Item = (Blade, S)>,
    {
        let mut m = Multivector::zero(sig);
        for (b, c) in terms {
            if !b.is_valid_for(&sig) {
                return Err(MultivectorError::InvalidBlade(b, sig));
            }
            m.insert(b, c);
        }
        Ok(m)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical blade order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    /// Coefficient of a blade (zero when absent).
    pub fn coeff(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    /// Add `value` onto the coefficient of `blade`, dropping the key when the
    /// sum cancels.
    fn insert(&mut self, blade: Blade, value: S) {
        if value.is_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            None => {
                self.terms.insert(blade, value);
            }
            Some(old) => {
                let sum = old + value;
                if !sum.is_zero() {
                    self.terms.insert(blade, sum);
                }
            }
        }
        self.audit();
    }

    /// Debug-build check that normalization never stores a zero.
    #[inline]
    fn audit(&self) {
        debug_assert!(self.terms.values().all(|c| !c.is_zero()));
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.insert(b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|_, c| -c)
    }

    /// Geometric product: bilinear extension of the signed blade product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        let mut out = Multivector::zero(self.sig);
        for (ba, ca) in self.terms() {
            for (bb, cb) in other.terms() {
                let (sign, blade) = blade_mul(&self.sig, ba, bb);
                let coeff = ca.clone() * cb.clone();
                let coeff = if sign < 0 { -coeff } else { coeff };
                out.insert(blade, coeff);
            }
        }
        out
    }

    /// Scale every coefficient by `factor`.
    pub fn scale(&self, factor: &S) -> Self {
        if factor.is_zero() {
            return Multivector::zero(self.sig);
        }
        self.map_coeffs(|_, c| c * factor.clone())
    }

    /// Divide every coefficient by `divisor`.
    pub fn scale_div(&self, divisor: &S) -> Self {
        self.map_coeffs(|_, c| c / divisor.clone())
    }

    /// Terms of grade exactly `k`.
    pub fn grade_part(&self, k: u32) -> Self {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in self.terms() {
            if b.grade() == k {
                out.insert(b, c.clone());
            }
        }
        out
    }

    /// Coefficient of the unit blade.
    pub fn scalar_part(&self) -> S {
        self.coeff(Blade::SCALAR)
    }

    /// Scalar product `a * b := <ab>_0` (no implicit reversion).
    pub fn scalar_product(&self, other: &Self) -> S {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        let mut acc = S::zero();
        for (ba, ca) in self.terms() {
            for (bb, cb) in other.terms() {
                let (sign, blade) = blade_mul(&self.sig, ba, bb);
                if blade.is_scalar() {
                    let term = ca.clone() * cb.clone();
                    acc = if sign < 0 { acc - term } else { acc + term };
                }
            }
        }
        acc
    }

    /// Reversion: grade-k part multiplied by `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Self {
        self.map_coeffs(|b, c| {
            let g = b.grade();
            if (g * g.wrapping_sub(1) / 2) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }

    /// Grade involution: grade-k part multiplied by `(-1)^k`.
    pub fn grade_negation(&self) -> Self {
        self.map_coeffs(|b, c| if b.grade() % 2 == 0 { c } else { -c })
    }

    /// Set of generator indices occurring in any stored blade, as a bit mask.
    pub fn span_mask(&self) -> u32 {
        self.terms().fold(0, |m, (b, _)| m | b.bits())
    }

    /// Ascending generator indices occurring in any stored blade.
    pub fn span(&self) -> Vec<u32> {
        Blade::from_bits(self.span_mask()).indices().collect()
    }

    /// Largest absolute coefficient (0 for the zero multivector).
    pub fn inf_norm(&self) -> f64 {
        self.terms()
            .map(|(_, c)| c.abs_f64())
            .fold(0.0, f64::max)
    }

    fn map_coeffs<F>(&self, f: F) -> Self
    where
        F: Fn(Blade, S) -> S,
    {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in self.terms() {
            out.insert(b, f(b, c.clone()));
        }
        out
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    /// Canonical textual form: terms in blade order, `<coeff>*<blade>`,
    /// the coefficient elided when it is +/-1 on a non-unit blade.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if b.is_scalar() {
                write!(f, "{abs}")?;
            } else if abs == S::one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{abs}*{b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    #[allow(unused_imports)]
    use crate::scalar::Scalar as _;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn blade(indices: &[u32]) -> Blade {
        Blade::from_indices(indices).unwrap()
    }

    fn mv(sig: Signature, terms: &[(&[u32], i64)]) -> Multivector<Rational> {
        Multivector::from_terms(
            sig,
            terms
                .iter()
                .map(|(idx, c)| (blade(idx), Rational::from_int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn add_cancellation_removes_key() {
        let s = sig(2, 0);
        let a = mv(s, &[(&[], 1), (&[1], 1)]);
        let b = mv(s, &[(&[1], -1)]);
        assert_eq!(a.add(&b), mv(s, &[(&[], 1)]));
        assert_eq!(a.add(&Multivector::zero(s)), a);
        let c = mv(s, &[(&[1, 2], 2)]);
        let d = mv(s, &[(&[1, 2], 3)]);
        assert_eq!(c.add(&d), mv(s, &[(&[1, 2], 5)]));
    }

    #[test]
    fn cl25_product_gives_22() {
        let s = sig(2, 5);
        let a = mv(s, &[(&[], 1), (&[1, 5], -2), (&[1, 3, 4], 5)]);
        let b = mv(s, &[(&[], 1), (&[1, 5], 2), (&[1, 3, 4], -5)]);
        assert_eq!(a.mul(&b), mv(s, &[(&[], 22)]));
        // same value via reversion: det A = A A~ = 22
        assert_eq!(a.mul(&a.reverse()), mv(s, &[(&[], 22)]));
    }

    #[test]
    fn mul_unit_and_zero_divisor() {
        let s = sig(1, 1);
        let a = mv(s, &[(&[], 1), (&[1], 1)]);
        assert_eq!(a.mul(&Multivector::one(s)), a);
        let b = mv(s, &[(&[], 1), (&[1], -1)]);
        assert!(a.mul(&b).is_zero());
    }

    #[test]
    fn grade_part_and_scalar_part() {
        let s = sig(2, 0);
        let a = mv(s, &[(&[], 1), (&[1], 2), (&[1, 2], 3)]);
        assert_eq!(a.grade_part(1), mv(s, &[(&[1], 2)]));
        assert_eq!(a.grade_part(0), mv(s, &[(&[], 1)]));
        assert!(mv(s, &[(&[1, 2], 1)]).grade_part(0).is_zero());
        assert_eq!(a.scalar_part(), Rational::from_int(1));
        let s25 = sig(2, 5);
        assert_eq!(mv(s25, &[(&[1, 3, 4], 1)]).scalar_part(), Rational::from_int(0));
    }

    #[test]
    fn scalar_product_examples() {
        let s = sig(2, 0);
        let e1 = mv(s, &[(&[1], 1)]);
        let e12 = mv(s, &[(&[1, 2], 1)]);
        assert_eq!(e1.scalar_product(&e1), Rational::from_int(1));
        assert_eq!(e12.scalar_product(&e12), Rational::from_int(-1));
        let a = mv(s, &[(&[], 7), (&[1], 3)]);
        assert_eq!(a.scalar_product(&Multivector::one(s)), Rational::from_int(7));
    }

    #[test]
    fn reverse_examples() {
        let s = sig(2, 0);
        let a = mv(s, &[(&[], 1), (&[1], 1)]);
        assert_eq!(a.reverse(), a);
        assert_eq!(
            mv(s, &[(&[1, 2], 1)]).reverse(),
            mv(s, &[(&[1, 2], -1)])
        );
    }

    #[test]
    fn grade_negation_examples() {
        let s = sig(2, 0);
        assert_eq!(
            mv(s, &[(&[], 1), (&[2], 1)]).grade_negation(),
            mv(s, &[(&[], 1), (&[2], -1)])
        );
        assert_eq!(
            mv(s, &[(&[1, 2], 1)]).grade_negation(),
            mv(s, &[(&[1, 2], 1)])
        );
    }

    #[test]
    fn cl52_grade_negation_identity() {
        // A A^t for A = 1 - e2 + I in Cl(5,2); the cross terms of e2 and the
        // pseudoscalar land on e134567, never on the pseudoscalar itself.
        let s = sig(5, 2);
        let a = mv(s, &[(&[], 1), (&[2], -1), (&[1, 2, 3, 4, 5, 6, 7], 1)]);
        let b = a.mul(&a.grade_negation());
        assert_eq!(b, mv(s, &[(&[], 1), (&[1, 3, 4, 5, 6, 7], -2)]));
        // det A = B B~ = 5 per the Shirokov-style cross-check
        assert_eq!(b.mul(&b.reverse()), mv(s, &[(&[], 5)]));
    }

    #[test]
    fn span_examples() {
        let s = sig(2, 5);
        let a = mv(s, &[(&[], 1), (&[1, 5], -2), (&[1, 3, 4], 5)]);
        assert_eq!(a.span(), vec![1, 3, 4, 5]);
        assert!(mv(s, &[(&[], 7)]).span().is_empty());
        assert_eq!(mv(s, &[(&[2], 1), (&[1, 3], 1)]).span(), vec![1, 2, 3]);
    }

    #[test]
    fn display_canonical_form() {
        let s = sig(2, 5);
        let a = mv(s, &[(&[], 1), (&[1, 5], 2), (&[1, 3, 4], -5)]);
        assert_eq!(a.to_string(), "1 + 2*e15 - 5*e134");
        assert_eq!(Multivector::<Rational>::zero(s).to_string(), "0");
        assert_eq!(mv(s, &[(&[1, 2], 1)]).to_string(), "e12");
        assert_eq!(mv(s, &[(&[1, 2], -1)]).to_string(), "-e12");
    }
}
