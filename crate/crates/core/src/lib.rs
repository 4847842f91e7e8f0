//! Exact multivector arithmetic in non-degenerate Clifford algebras Cl(p,q),
//! with characteristic polynomials, inverses, and representation
//! determinants computed by the Faddeev-LeVerrier-Souriau recursion.
//!
//! The crate is organized around:
//! - [`blades`]: canonical basis blades, their ordering, and the signed
//!   blade product;
//! - [`multivector`]: sparse multivector arithmetic over an abstract scalar
//!   field (exact rationals or `f64`);
//! - [`matrep`]: the real matrix representation over an extended basis,
//!   used as an independent verification oracle, plus an exact
//!   fraction-free determinant;
//! - [`fvs`]: the inversion/characteristic-polynomial recursion with full,
//!   Bott-halved, and span-reduced step counts;
//! - [`parser`]: the stable textual syntax used by the CLI and fixtures.

pub mod blades;
pub mod fvs;
pub mod matrep;
pub mod multivector;
pub mod parser;
pub mod scalar;

pub use blades::{blade_cmp, blade_mul, Blade, Signature};
pub use fvs::{char_poly, fvs_run, inverse, rep_determinant, step_count, FvsResult, StepMode};
pub use matrep::{
    bareiss_det, metric_matrix, mul_table, pi, pi_inverse, rep_matrix, ExtendedBasis, RepMatrix,
};
pub use multivector::Multivector;
pub use parser::{format, parse, ParseError};
pub use scalar::{Rational, Scalar};
