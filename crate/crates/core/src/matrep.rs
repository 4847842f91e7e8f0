//! Real matrix representation of the algebra over an extended basis.
//!
//! Each basis blade maps to a signed permutation matrix `E_s = G A_s` built
//! from the basis multiplication table; linear extension gives a faithful
//! representation of the (sub)algebra spanned by the chosen generators. The
//! module doubles as the independent oracle for the FVS recursion, so it also
//! carries an exact fraction-free determinant.

use thiserror::Error;

use crate::blades::{blade_mul, Blade, Signature};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Default cap on the basis rank: matrices are dense 2^s x 2^s.
pub const MAX_BASIS_RANK: u32 = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrepError {
    #[error("generator set must be nonempty")]
    EmptyGenerators,
    #[error("generator {0} out of range for {1}")]
    GeneratorOutOfRange(u32, Signature),
    #[error("basis rank {0} exceeds the cap of {1} generators")]
    RankTooLarge(u32, u32),
    #[error("multivector span {{{0:?}}} is not covered by the basis generators")]
    SpanNotCovered(Vec<u32>),
}

/// The 2^s blades over a generator subset, sorted grade-lexicographically.
/// Ordinal 0 is always the unit blade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedBasis {
    sig: Signature,
    generators: Vec<u32>,
    blades: Vec<Blade>,
}

impl ExtendedBasis {
    /// Basis over an ascending subset of the generators, capped at
    /// [`MAX_BASIS_RANK`].
    pub fn new(sig: Signature, generators: &[u32]) -> Result<Self, MatrepError> {
        Self::with_rank_cap(sig, generators, MAX_BASIS_RANK)
    }

    /// Same as [`ExtendedBasis::new`] with an explicit rank cap.
    pub fn with_rank_cap(
        sig: Signature,
        generators: &[u32],
        cap: u32,
    ) -> Result<Self, MatrepError> {
        if generators.is_empty() {
            return Err(MatrepError::EmptyGenerators);
        }
        let mut gens: Vec<u32> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        for &g in &gens {
            if g < 1 || g > sig.n() {
                return Err(MatrepError::GeneratorOutOfRange(g, sig));
            }
        }
        let s = gens.len() as u32;
        if s > cap {
            return Err(MatrepError::RankTooLarge(s, cap));
        }
        let mut blades = Vec::with_capacity(1 << s);
        for mask in 0u32..1 << s {
            let mut bits = 0u32;
            for (k, &g) in gens.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    bits |= 1 << (g - 1);
                }
            }
            blades.push(Blade::from_bits(bits));
        }
        blades.sort();
        Ok(ExtendedBasis {
            sig,
            generators: gens,
            blades,
        })
    }

    /// Basis over all generators of the signature.
    pub fn full(sig: Signature) -> Result<Self, MatrepError> {
        let gens: Vec<u32> = (1..=sig.n()).collect();
        Self::new(sig, &gens)
    }

    /// Basis over the span of a multivector. The span must be nonempty.
    pub fn span_of<S: Scalar>(a: &Multivector<S>) -> Result<Self, MatrepError> {
        Self::new(a.signature(), &a.span())
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    /// 2^s, the matrix dimension.
    pub fn dim(&self) -> usize {
        self.blades.len()
    }

    /// Ordinal of a blade in the basis, if present.
    pub fn ordinal(&self, blade: Blade) -> Option<usize> {
        self.blades.binary_search(&blade).ok()
    }

    /// True when every blade of `a` lies over the basis generators.
    pub fn covers<S: Scalar>(&self, a: &Multivector<S>) -> bool {
        let gen_mask = self
            .generators
            .iter()
            .fold(0u32, |m, &g| m | 1 << (g - 1));
        a.span_mask() & !gen_mask == 0
    }
}

/// Multiplication table of an extended basis: entry (i,j) is the signed
/// blade `blades[i] * blades[j]`.
#[derive(Debug, Clone)]
pub struct MulTable {
    dim: usize,
    entries: Vec<(i8, Blade)>,
}

impl MulTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> (i8, Blade) {
        self.entries[i * self.dim + j]
    }
}

/// Diagonal of blade square signs over the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricMatrix {
    diagonal: Vec<i8>,
}

impl MetricMatrix {
    pub fn diagonal(&self) -> &[i8] {
        &self.diagonal
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.diagonal[i]
    }
}

/// Dense square matrix of scalars of dimension 2^s.
#[derive(Debug, Clone, PartialEq)]
pub struct RepMatrix<S: Scalar> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> RepMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        RepMatrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RepMatrix::zeros(dim);
        for i in 0..dim {
            *m.get_mut(i, i) = S::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.entries[i * self.dim + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = RepMatrix::<S>::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let acc = out.get(i, j).clone() + a.clone() * b.clone();
                    *out.get_mut(i, j) = acc;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.clone() + b.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.clone() - b.clone();
        }
        out
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.clone() * factor.clone();
        }
        out
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.dim {
            t = t + self.get(i, i).clone();
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Exactly one nonzero entry per row and per column.
    pub fn is_sparse_signed_permutation(&self) -> bool {
        let mut col_seen = vec![false; self.dim];
        for i in 0..self.dim {
            let mut row_count = 0;
            for (j, seen) in col_seen.iter_mut().enumerate() {
                if !self.get(i, j).is_zero() {
                    row_count += 1;
                    if *seen {
                        return false;
                    }
                    *seen = true;
                }
            }
            if row_count != 1 {
                return false;
            }
        }
        col_seen.iter().all(|&c| c)
    }
}

/// Multiplication table of the extended basis.
pub fn mul_table(basis: &ExtendedBasis) -> MulTable {
    let dim = basis.dim();
    let sig = basis.signature();
    let mut entries = Vec::with_capacity(dim * dim);
    for &bi in basis.blades() {
        for &bj in basis.blades() {
            entries.push(blade_mul(&sig, bi, bj));
        }
    }
    MulTable { dim, entries }
}

/// Diagonal metric over the basis: sign(i) is the square sign of blade i.
pub fn metric_matrix(basis: &ExtendedBasis) -> MetricMatrix {
    let sig = basis.signature();
    MetricMatrix {
        diagonal: basis.blades().iter().map(|b| b.square_sign(&sig)).collect(),
    }
}

/// Coefficient matrix `A_s`: entry (i,j) is the signed coefficient of blade
/// ordinal `s` in table entry (i,j), zero otherwise. Sparse by construction.
pub fn coeff_matrix<S: Scalar>(table: &MulTable, basis: &ExtendedBasis, s: usize) -> RepMatrix<S> {
    let target = basis.blades()[s];
    let dim = table.dim();
    let mut m = RepMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let (sign, blade) = table.entry(i, j);
            if blade == target {
                *m.get_mut(i, j) = if sign < 0 { -S::one() } else { S::one() };
            }
        }
    }
    m
}

/// Representation matrix `E_s = G A_s` of blade ordinal `s`.
pub fn rep_matrix<S: Scalar>(
    basis: &ExtendedBasis,
    table: &MulTable,
    metric: &MetricMatrix,
    s: usize,
) -> RepMatrix<S> {
    let mut m = coeff_matrix::<S>(table, basis, s);
    for i in 0..m.dim() {
        if metric.sign(i) < 0 {
            for j in 0..m.dim() {
                let e = m.get_mut(i, j);
                if !e.is_zero() {
                    *e = -e.clone();
                }
            }
        }
    }
    m
}

/// Image of a multivector under the representation map: the sum of its
/// coefficients times the blade images. Errors when the span is not covered.
pub fn pi<S: Scalar>(a: &Multivector<S>, basis: &ExtendedBasis) -> Result<RepMatrix<S>, MatrepError> {
    if !basis.covers(a) {
        return Err(MatrepError::SpanNotCovered(a.span()));
    }
    let table = mul_table(basis);
    let metric = metric_matrix(basis);
    let mut out = RepMatrix::zeros(basis.dim());
    for (blade, coeff) in a.terms() {
        let s = basis
            .ordinal(blade)
            .expect("blade over covered span must be in basis");
        let e = rep_matrix::<S>(basis, &table, &metric, s);
        out = out.add(&e.scale(coeff));
    }
    Ok(out)
}

/// Recover a multivector from a matrix in the image of the map: the first
/// row holds the coefficients against the basis blade column.
pub fn pi_inverse<S: Scalar>(m: &RepMatrix<S>, basis: &ExtendedBasis) -> Multivector<S> {
    let terms = basis
        .blades()
        .iter()
        .enumerate()
        .map(|(j, &b)| (b, m.get(0, j).clone()));
    Multivector::from_terms(basis.signature(), terms)
        .expect("basis blades are valid for the signature")
}

/// Exact determinant. Exact scalars use single-step Bareiss fraction-free
/// elimination with row pivoting; the float realization uses scaled partial
/// pivoting with a relative singularity threshold.
pub fn bareiss_det<S: Scalar>(m: &RepMatrix<S>) -> S {
    if S::EXACT {
        bareiss_det_exact(m)
    } else {
        partial_pivot_det(m)
    }
}

fn bareiss_det_exact<S: Scalar>(m: &RepMatrix<S>) -> S {
    let n = m.dim();
    if n == 0 {
        return S::one();
    }
    let mut w = m.clone();
    let mut negated = false;
    let mut prev = S::one();
    for k in 0..n {
        if w.get(k, k).is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !w.get(r, k).is_zero()) else {
                return S::zero();
            };
            for j in 0..n {
                let a = w.get(k, j).clone();
                let b = w.get(r, j).clone();
                *w.get_mut(k, j) = b;
                *w.get_mut(r, j) = a;
            }
            negated = !negated;
        }
        let pivot = w.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = w.get(i, j).clone() * pivot.clone()
                    - w.get(i, k).clone() * w.get(k, j).clone();
                *w.get_mut(i, j) = num / prev.clone();
            }
            *w.get_mut(i, k) = S::zero();
        }
        prev = pivot;
    }
    let det = w.get(n - 1, n - 1).clone();
    if negated {
        -det
    } else {
        det
    }
}

fn partial_pivot_det<S: Scalar>(m: &RepMatrix<S>) -> S {
    let n = m.dim();
    if n == 0 {
        return S::one();
    }
    let mut w = m.clone();
    let mut det = S::one();
    for k in 0..n {
        let (r, _) = (k..n)
            .map(|r| (r, w.get(r, k).abs_f64()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        let row_max = (k..n).map(|j| w.get(r, j).abs_f64()).fold(0.0, f64::max);
        if w.get(r, k).abs_f64() < 1e-12 * row_max.max(f64::MIN_POSITIVE) {
            return S::zero();
        }
        if r != k {
            for j in 0..n {
                let a = w.get(k, j).clone();
                let b = w.get(r, j).clone();
                *w.get_mut(k, j) = b;
                *w.get_mut(r, j) = a;
            }
            det = -det;
        }
        let pivot = w.get(k, k).clone();
        det = det * pivot.clone();
        for i in k + 1..n {
            let factor = w.get(i, k).clone() / pivot.clone();
            for j in k..n {
                let v = w.get(i, j).clone() - factor.clone() * w.get(k, j).clone();
                *w.get_mut(i, j) = v;
            }
        }
    }
    det
}
