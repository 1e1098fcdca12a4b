//! Determinantal quartic surfaces built from a 4×4×4 rational tensor.
//!
//! The crate has four layers:
//!
//! - [`exactalg`]: the arithmetic kernel — exact rationals, quadratic
//!   extensions Q(√d), sparse multivariate polynomials in x0..x3 with a fixed
//!   graded-lex order, 4×4 polynomial matrices, and high-precision complex
//!   fixed-point numerics with a simultaneous root finder.
//! - [`tritensor`]: the tensor itself, its flattenings and contractions, the
//!   three determinantal quartics, and deterministic point/tensor generators.
//! - [`cayley`]: the six cofactor-kernel maps between the quartics, their
//!   exact divisibility certificates, inverse pairings, and the triangle loop
//!   map with orbit / fixed-point probes.
//! - [`beauville`]: the Beauville involution on unordered point pairs (line
//!   through the pair, residual intersection), exact over Q(√d) and numeric
//!   at high precision, plus the loop-vs-involutions comparison experiment.
//! - [`nslattice`]: rank-2 lattice arithmetic — Gram pairings, unit
//!   multiplication matrices, isometry tests, entropy, divisor squares,
//!   the (m, a) generator classification and Riemann–Roch bounds.

pub mod beauville;
pub mod cayley;
pub mod exactalg;
pub mod nslattice;
pub mod rng;
pub mod tritensor;
