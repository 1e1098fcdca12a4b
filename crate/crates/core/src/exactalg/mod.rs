//! Arithmetic kernel: exact rationals, quadratic extensions, sparse
//! multivariate and univariate polynomials, 4×4 polynomial matrices, and
//! high-precision complex fixed-point numerics.
//!
//! Everything here is an immutable value; every operation is a pure function.

mod hp;
mod linalg;
mod multipoly;
mod polymatrix;
mod quadext;
mod rational;
mod ring;
mod roots;
mod unipoly;

pub use hp::{HpComplex, HpReal, MIN_PRECISION};
pub use linalg::{nullspace, rank};
pub use multipoly::{Monomial, MultiPoly};
pub use polymatrix::PolyMatrix4;
pub use quadext::QuadExtElem;
pub use rational::{
    format_rational, parse_rational, rat, rational_sqrt, square_free_decompose, Rational,
};
pub use ring::{Field, HpComplexField, QuadExtField, RationalField, Ring, UniPolyRing};
pub use roots::all_roots;
pub use unipoly::{quad_solve, quad_solve_in_field, QuadRoots, UniPoly};

use thiserror::Error;

/// Errors raised by the arithmetic kernel.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("root iteration did not converge within the budget ({residual_bits} bits attained)")]
    NonConvergence { residual_bits: i64 },
    #[error("expected degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("square root does not exist in Q(\u{221a}{d})")]
    SqrtNotInField { d: String },
    #[error("polynomial text parse error: {0}")]
    PolyParse(String),
}
