//! Exact enumeration of fully commutative elements in the classical affine
//! Coxeter families, by length.
//!
//! The growth sequences of fully commutative elements (and of the
//! involutions among them) in the affine families are ultimately periodic.
//! This crate computes them two independent ways and cross-checks:
//!
//! - a brute-force census ([`coxeter::fc_census`]) that grows heaps of
//!   pieces one maximal element at a time and counts commutation classes
//!   by canonical word;
//! - closed-form quasi-rational tails ([`formulas::closed_tail`]) built
//!   from Gaussian binomials, q-Pochhammer products, and lattice-path
//!   polynomials, expanded exactly.
//!
//! On top of the tails sit the minimal ultimate periods
//! ([`formulas::minimal_period`]), exact partial-fraction coefficients and
//! Ramanujan-sum expressions for the eventual values, the boundary
//! decomposition of long heaps into box partitions ([`coxeter::decompose_a`],
//! [`coxeter::decompose_c`]), and a cyclic sieving check for rotations of
//! closed lattice paths ([`paths::csp_verify`]).
//!
//! All reported values are exact: integer and rational arithmetic is
//! arbitrary precision, and complex floating point appears only in
//! cross-check evaluations at roots of unity, with rounding residues
//! verified against a fixed tolerance.
//!
//! The `affine-fc` binary exposes the same operations as subcommands with
//! table, CSV, and JSON reports; see the crate README.

pub mod coxeter;
pub mod formulas;
pub mod heaps;
pub mod numtheory;
pub mod partitions;
pub mod paths;
pub mod qseries;

pub mod cli;

pub use qseries::{Polynomial, Scalar};

/// Polynomial with arbitrary-precision integer coefficients: the working
/// scalar for every exact series in this crate.
pub type Poly = Polynomial<num_bigint::BigInt>;

/// Polynomial with machine-word coefficients, for small exact computations
/// that provably stay within `i64`.
pub type Poly64 = Polynomial<i64>;
