//! Descent distribution over 123-avoiding permutations.
//!
//! A 123-avoiding permutation is sent by [`bijection::kappa`] to a Dyck
//! path of the same size, and its descents become the valleys plus triple
//! falls of that path. The crate tabulates the joint valley/triple-fall
//! distribution by recurrence ([`tables`]), cross-checks it against
//! exhaustive enumeration, and verifies the generating-function identities
//! and closed forms with exact power series ([`series`]).
//!
//! Numeric code is generic: tables over any [`Count`], series over any
//! [`Scalar`]. The aliases below fix the exact choices used by default.

pub mod bijection;
pub mod dyck;
pub mod export;
pub mod numbers;
pub mod perm;
pub mod report;
pub mod scalar;
pub mod series;
pub mod tables;

use num_bigint::BigUint;
use num_rational::BigRational;

pub use bijection::{check_descent_identity, kappa, kappa_inverse, BijectionError, DescentCheck};
pub use dyck::{parse_path, DyckPath, PathError, RunForm, Step};
pub use perm::{parse_permutation, MinDecomposition, PermError, Permutation};
pub use report::{CheckReport, IdentityReport, Mismatch};
pub use scalar::{Count, Scalar};
pub use series::{Poly, PolySeries, SeriesError};
pub use tables::{EulerianRow, TableError, TableKind, Tables, TriStatTable};

/// Arbitrary-precision tallies.
pub type BigTables = Tables<BigUint>;
pub type BigTriStatTable = TriStatTable<BigUint>;
pub type BigEulerianRow = EulerianRow<BigUint>;

/// Exact rational coefficients.
pub type RationalPoly = Poly<BigRational>;
pub type RationalSeries = PolySeries<BigRational>;

/// Floating-point coefficients, for numeric evaluation only.
pub type FloatPoly = Poly<f64>;
pub type FloatSeries = PolySeries<f64>;
