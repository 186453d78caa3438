//! Triples of integers `a, b, c > 1` for which `ab+1`, `ac+1`, `bc+1` and
//! `abc+1` are all perfect squares.
//!
//! The crate is split along the life of such a triple:
//!
//! * [`sequences`] evaluates the integer recurrences `P`, `A`, `R` that
//!   parametrize the points of the conic `x² − 4xy + y² = 1`.
//! * [`family`] turns a conic point into a triple through closed-form
//!   polynomials (the main family), plus the companion and degenerate
//!   constructions.
//! * [`certify`] decides squareness exactly and produces root certificates.
//! * [`symbolic`] reduces polynomials modulo the conic relation and checks
//!   every identity the construction relies on.
//! * [`search`] enumerates all admissible triples below a bound and carries a
//!   brute-force oracle for cross-validation.
//! * [`record`] is the stable, decimal-string serialization used by the CLI.

pub mod certify;
mod error;
pub mod family;
pub mod record;
pub mod search;
pub mod sequences;
pub mod symbolic;

pub use error::{Error, Result};

/// Arbitrary-precision signed integer used for every sequence value and triple entry.
pub type Int = num_bigint::BigInt;

/// Exact rational with a positive, reduced denominator.
pub type Rat = num_rational::BigRational;
