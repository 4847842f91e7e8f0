//! Characteristic polynomials, inverses, and representation determinants of
//! multivectors via the Faddeev-LeVerrier-Souriau recursion.
//!
//! With step count `N` the recursion is
//!
//! ```text
//! M_0 = 1
//! for i in 1..=N:
//!     K_i = A * M_{i-1}
//!     c_i = -(N/i) * <K_i>_0
//!     M_i = K_i + c_i
//! ```
//!
//! On completion `M_N = 0` (exactly, for exact scalars) and the inverse is
//! `-M_{N-1}/c_N` when `c_N != 0`. The monic characteristic polynomial is
//! `v^N + c_1 v^{N-1} + ... + c_N`, whose constant term carries the
//! representation determinant.

use thiserror::Error;

use crate::multivector::Multivector;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FvsError {
    /// The final coefficient vanishes: the multivector is a zero divisor.
    #[error("inverse does not exist: c_N = 0")]
    Singular,
    /// Exact run finished with a nonzero final iterate; internal fault.
    #[error("recursion did not terminate with a zero iterate after {0} steps")]
    NonTermination(usize),
}

/// Step-count policy for a run.
///
/// `Full` runs the unhalved count over the span subalgebra, `Bott` halves
/// the exponent of the ambient algebra, `SpanReduced` (the default policy)
/// halves the exponent of the span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepMode {
    /// `N = 2^s` over the `s` generators spanned by the input.
    Full,
    /// `N = 2^ceil(n/2)` for the ambient algebra of `n` generators.
    Bott,
    /// `N = 2^ceil(s/2)` over the `s` generators spanned by the input.
    SpanReduced,
}

/// Outcome of a run: coefficients `c_1..c_N`, the optional per-step trace
/// `(c_i, K_i)`, and the inverse when it exists.
#[derive(Debug, Clone, PartialEq)]
pub struct FvsResult<S: Scalar> {
    pub mode: StepMode,
    /// Steps executed with a nonzero iterate (equals `N` except for zero
    /// divisors detected early).
    pub steps_run: usize,
    /// `c_1..c_N`; zero-padded past `steps_run` for early-detected zero
    /// divisors, which keeps the constant term the true determinant.
    pub coeffs: Vec<S>,
    /// `(c_i, K_i)` pairs, recorded when requested.
    pub iterates: Option<Vec<(S, Multivector<S>)>>,
    pub inverse: Option<Multivector<S>>,
    pub singular: bool,
}

/// Number of recursion steps for a multivector under a policy. Always a
/// power of two; 1 only for nonzero pure-scalar input under a span-based
/// policy. The zero multivector spans no generators but lies in every
/// subalgebra, so the span policies fall back to the ambient count for it.
pub fn step_count<S: Scalar>(a: &Multivector<S>, mode: StepMode) -> usize {
    let n = a.signature().n();
    let s = if a.is_zero() {
        n
    } else {
        a.span().len() as u32
    };
    let exp = match mode {
        StepMode::Full => s,
        StepMode::Bott => n.div_ceil(2),
        StepMode::SpanReduced => s.div_ceil(2),
    };
    1usize << exp
}

/// Run the recursion. `Singular` is not an error here: the result carries
/// the flag and the coefficient sequence either way.
pub fn fvs_run<S: Scalar>(
    a: &Multivector<S>,
    mode: StepMode,
    want_trace: bool,
) -> Result<FvsResult<S>, FvsError> {
    let steps = step_count(a, mode);
    let sig = a.signature();
    let a_norm = a.inf_norm();

    let mut coeffs: Vec<S> = Vec::with_capacity(steps);
    let mut iterates = want_trace.then(Vec::new);
    let mut m_prev = Multivector::one(sig);
    let mut m_before_prev = None;

    for i in 1..=steps {
        let k = a.mul(&m_prev);
        if iterate_vanishes::<S>(&k, a_norm, i) {
            // A times a nonzero iterate vanished: A is a zero divisor (for
            // the zero input this fires at i = 1). Padding the remaining
            // coefficients with zeros yields the true characteristic
            // polynomial, since the matrix-side recursion also goes to zero
            // from here on.
            let steps_run = i - 1;
            coeffs.resize(steps, S::zero());
            return Ok(FvsResult {
                mode,
                steps_run,
                coeffs,
                iterates,
                inverse: None,
                singular: true,
            });
        }
        let c = S::from_ratio(-(steps as i64), i as i64) * k.scalar_part();
        if let Some(trace) = iterates.as_mut() {
            trace.push((c.clone(), k.clone()));
        }
        let m = k.add(&Multivector::scalar(sig, c.clone()));
        coeffs.push(c);
        m_before_prev = Some(m_prev);
        m_prev = m;
    }

    // exact runs must close with a zero iterate
    if S::EXACT && !m_prev.is_zero() {
        return Err(FvsError::NonTermination(steps));
    }

    let c_last = coeffs.last().expect("steps >= 1").clone();
    let singular = c_last.is_zero();
    let inverse = if singular {
        None
    } else {
        let m_penultimate = m_before_prev.expect("steps >= 1");
        Some(m_penultimate.neg().scale_div(&c_last))
    };
    Ok(FvsResult {
        mode,
        steps_run: steps,
        coeffs,
        iterates,
        inverse,
        singular,
    })
}

fn iterate_vanishes<S: Scalar>(k: &Multivector<S>, a_norm: f64, i: usize) -> bool {
    if S::EXACT {
        k.is_zero()
    } else {
        k.inf_norm() <= 1e-12 * a_norm.powi(i as i32).max(1.0)
    }
}

/// Monic characteristic polynomial, highest degree first:
/// `[1, c_1, ..., c_N]`. A zero constant term is a valid outcome here.
pub fn char_poly<S: Scalar>(a: &Multivector<S>, mode: StepMode) -> Result<Vec<S>, FvsError> {
    let run = fvs_run(a, mode, false)?;
    let mut poly = Vec::with_capacity(run.coeffs.len() + 1);
    poly.push(S::one());
    poly.extend(run.coeffs);
    Ok(poly)
}

/// Determinant of the representation under the chosen step policy:
/// `(-1)^N` times the constant term of the characteristic polynomial.
pub fn rep_determinant<S: Scalar>(a: &Multivector<S>, mode: StepMode) -> Result<S, FvsError> {
    let run = fvs_run(a, mode, false)?;
    let c_last = run.coeffs.last().expect("at least one step").clone();
    if run.coeffs.len() % 2 == 0 {
        Ok(c_last)
    } else {
        Ok(-c_last)
    }
}

/// Convenience wrapper: span-reduced inverse, or `Singular`.
pub fn inverse<S: Scalar>(a: &Multivector<S>) -> Result<Multivector<S>, FvsError> {
    let run = fvs_run(a, StepMode::SpanReduced, false)?;
    run.inverse.ok_or(FvsError::Singular)
}
