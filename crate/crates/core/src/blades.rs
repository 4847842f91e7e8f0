//! Canonical basis blades, the grade-lexicographic ordering, and the signed
//! blade product under a non-degenerate diagonal metric.
//!
//! A blade is a strictly ascending set of generator indices (1-based), stored
//! as a bit pattern; the empty set is the scalar unit. The product of two
//! blades is the symmetric difference of their index sets, with a sign from
//! the transpositions needed to interleave the factors plus the metric signs
//! of the contracted generators.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Hard cap on the number of generators.
pub const MAX_GENERATORS: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("algebra must have at least one generator")]
    Empty,
    #[error("p + q = {0} exceeds the supported maximum of {MAX_GENERATORS} generators")]
    TooLarge(u32),
    #[error("degenerate algebras (r = {0} > 0) are not supported")]
    Degenerate(u32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BladeError {
    #[error("blade indices must be strictly ascending, got {0} after {1}")]
    NotAscending(u32, u32),
    #[error("generator index {0} out of range (valid: 1..={1})")]
    IndexOutOfRange(u32, u32),
}

/// Metadata of a non-degenerate algebra Cl(p,q): `p` generators squaring to
/// +1 followed by `q` squaring to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u32,
    q: u32,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Result<Self, SignatureError> {
        let n = p + q;
        if n == 0 {
            return Err(SignatureError::Empty);
        }
        if n > MAX_GENERATORS {
            return Err(SignatureError::TooLarge(n));
        }
        Ok(Signature { p, q })
    }

    /// Constructor taking an explicit degenerate dimension; rejects `r > 0`.
    pub fn new_pqr(p: u32, q: u32, r: u32) -> Result<Self, SignatureError> {
        if r > 0 {
            return Err(SignatureError::Degenerate(r));
        }
        Signature::new(p, q)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Total number of generators.
    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// Square sign of generator `i` (1-based): +1 for `i <= p`, -1 otherwise.
    pub fn generator_square(&self, i: u32) -> i8 {
        debug_assert!(i >= 1 && i <= self.n());
        if i <= self.p {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// A canonical basis blade: bit `i-1` set iff generator `i` is a factor.
/// The zero pattern is the scalar unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u32);

impl Blade {
    /// The scalar unit blade `1`.
    pub const SCALAR: Blade = Blade(0);

    pub fn generator(i: u32) -> Result<Self, BladeError> {
        if !(1..=MAX_GENERATORS).contains(&i) {
            return Err(BladeError::IndexOutOfRange(i, MAX_GENERATORS));
        }
        Ok(Blade(1 << (i - 1)))
    }

    /// Build a blade from strictly ascending 1-based generator indices.
    pub fn from_indices(indices: &[u32]) -> Result<Self, BladeError> {
        let mut bits = 0u32;
        let mut prev = 0u32;
        for &i in indices {
            if !(1..=MAX_GENERATORS).contains(&i) {
                return Err(BladeError::IndexOutOfRange(i, MAX_GENERATORS));
            }
            if i <= prev {
                return Err(BladeError::NotAscending(i, prev));
            }
            bits |= 1 << (i - 1);
            prev = i;
        }
        Ok(Blade(bits))
    }

    /// Blade from a raw characteristic bit pattern.
    pub fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    /// The full-index blade over the first `n` generators.
    pub fn pseudoscalar(sig: &Signature) -> Self {
        Blade((1u32 << sig.n()) - 1)
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_scalar(&self) -> bool {
        self.0 == 0
    }

    /// Ascending 1-based generator indices.
    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// True when every index fits the ambient signature.
    pub fn is_valid_for(&self, sig: &Signature) -> bool {
        self.0 >> sig.n() == 0
    }

    /// Square sign of the blade under the metric:
    /// `(-1)^(g(g-1)/2)` times the product of the generator squares.
    pub fn square_sign(&self, sig: &Signature) -> i8 {
        let g = self.grade();
        let mut sign = if (g * g.wrapping_sub(1) / 2).is_multiple_of(2) {
            1i8
        } else {
            -1
        };
        for i in self.indices() {
            sign *= sig.generator_square(i);
        }
        sign
    }
}

/// Grade-then-lexicographic total order on blades; the scalar unit is
/// minimal and sorting the power set by it yields the extended basis.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let mut a = self.0;
            let mut b = other.0;
            while a != 0 && b != 0 {
                let ia = a.trailing_zeros();
                let ib = b.trailing_zeros();
                match ia.cmp(&ib) {
                    Ordering::Equal => {
                        a &= a - 1;
                        b &= b - 1;
                    }
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return write!(f, "1");
        }
        if self.indices().all(|i| i <= 9) {
            write!(f, "e")?;
            for i in self.indices() {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            write!(f, "e[")?;
            for (k, i) in self.indices().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, "]")
        }
    }
}

/// The ordering relation on blades, exposed as a function.
pub fn blade_cmp(a: Blade, b: Blade) -> Ordering {
    a.cmp(&b)
}

/// Signed product of two blades: the result blade is the symmetric
/// difference of the index sets; the sign counts the transpositions needed
/// to interleave the concatenated factors into ascending order (merge
/// count), times the metric signs of the contracted common generators.
pub fn blade_mul(sig: &Signature, a: Blade, b: Blade) -> (i8, Blade) {
    debug_assert!(a.is_valid_for(sig) && b.is_valid_for(sig));
    let mut inversions = 0u32;
    {
        let mut ai = a.indices().peekable();
        let mut bi = b.indices().peekable();
        let mut remaining_a = a.grade();
        while let (Some(&x), Some(&y)) = (ai.peek(), bi.peek()) {
            if x <= y {
                ai.next();
                remaining_a -= 1;
            } else {
                // y jumps over everything still pending in a
                inversions += remaining_a;
                bi.next();
            }
        }
    }
    let mut sign = if inversions.is_multiple_of(2) { 1i8 } else { -1 };
    let common = Blade(a.0 & b.0);
    for i in common.indices() {
        sign *= sig.generator_square(i);
    }
    (sign, Blade(a.0 ^ b.0))
}
