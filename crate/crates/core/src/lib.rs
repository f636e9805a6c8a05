//! Desk-scale numerical laboratory for primes in arithmetic progressions
//! to square moduli.
//!
//! The crate provides the building blocks for empirical verification of
//! large-sieve-type inequalities over the moduli set {q^2 : Q < q^2 <= 2Q}:
//!
//! - [`sieve`]: immutable least-prime-factor tables and the arithmetic
//!   functions Lambda, mu, phi and the squarefree-times-square split;
//! - [`ap_error`]: psi-type progression sums, the maximal error E(x, q)
//!   and its average over a square-modulus window;
//! - [`riesz`]: Riesz means A_k and their remainders r_k;
//! - [`convolution`]: multi-fold coefficient convolutions over dyadic
//!   ranges and weighted remainder sums;
//! - [`farey`]: exact-rational counting of Farey points with square (and
//!   g-times-square) denominators near a target, plus an interval sweep
//!   for the maximal overlap count;
//! - [`chars`]: Dirichlet character groups, conductors, primitive parts;
//! - [`large_sieve`]: exponential/character mean squares and the
//!   inequality checks built from them;
//! - [`coeffs`]: coefficient vectors and the standard test families.
//!
//! Everything is deterministic: random inputs are seeded, float
//! accumulations are compensated and reductions happen in a fixed order,
//! so repeated runs produce identical bytes.

pub mod ap_error;
pub mod chars;
pub mod coeffs;
pub mod convolution;
pub mod error;
pub mod farey;
pub mod fit;
pub mod kahan;
pub mod large_sieve;
pub mod riesz;
pub mod sieve;

pub use error::{Error, Result};
pub use kahan::KahanSum;
pub use sieve::PrimeTable;
