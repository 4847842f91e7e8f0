//! Shared helpers for the integration suites.
#![allow(dead_code)]

use clifford_fvs::{Blade, Multivector, Rational, Scalar, Signature};
use rand::Rng;

pub fn sig(p: u32, q: u32) -> Signature {
    Signature::new(p, q).unwrap()
}

pub fn blade(indices: &[u32]) -> Blade {
    Blade::from_indices(indices).unwrap()
}

pub fn mv(sig: Signature, terms: &[(&[u32], i64)]) -> Multivector<Rational> {
    Multivector::from_terms(
        sig,
        terms
            .iter()
            .map(|(idx, c)| (blade(idx), Rational::from_int(*c))),
    )
    .unwrap()
}

pub fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| Rational::from_int(v)).collect()
}

/// All signatures with 1 <= p+q <= max_n.
pub fn all_signatures(max_n: u32) -> Vec<Signature> {
    let mut v = Vec::new();
    for n in 1..=max_n {
        for p in 0..=n {
            v.push(sig(p, n - p));
        }
    }
    v
}

/// Random sparse multivector with small rational coefficients and at most
/// `max_terms` terms drawn from the full blade set.
pub fn random_mv<R: Rng>(rng: &mut R, sig: Signature, max_terms: usize) -> Multivector<Rational> {
    let n = sig.n();
    let count = rng.gen_range(1..=max_terms);
    let mut terms = Vec::new();
    for _ in 0..count {
        let bits = rng.gen_range(0..1u32 << n);
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=3);
        terms.push((Blade::from_bits(bits), Rational::from_ratio(num, den)));
    }
    Multivector::from_terms(sig, terms).unwrap()
}

/// Like `random_mv` but guaranteed to have a nonempty span.
pub fn random_mv_nonscalar<R: Rng>(
    rng: &mut R,
    sig: Signature,
    max_terms: usize,
) -> Multivector<Rational> {
    loop {
        let a = random_mv(rng, sig, max_terms);
        if !a.span().is_empty() {
            return a;
        }
    }
}

/// Multiply two dense polynomials given highest-degree-first.
pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let cur = out[i + j].clone() + x.clone() * y.clone();
            out[i + j] = cur;
        }
    }
    out
}

/// `p^k` by repeated multiplication.
pub fn poly_pow(p: &[Rational], k: usize) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    for _ in 0..k {
        out = poly_mul(&out, p);
    }
    out
}

/// Evaluate a highest-degree-first polynomial at a point.
pub fn poly_eval(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p {
        acc = acc * x.clone() + c.clone();
    }
    acc
}
