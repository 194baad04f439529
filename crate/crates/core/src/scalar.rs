//! Numeric abstractions shared by the tables and the series code.
//!
//! [`Count`] is the carrier for path and permutation tallies. Every
//! operation on it is checked, so a fixed-width count type reports
//! overflow instead of wrapping. [`Scalar`] is the coefficient field of
//! the power series; exact work uses `BigRational`, floating point is
//! available for quick numeric evaluation.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Num, One, ToPrimitive, Zero};

/// Nonnegative tally type used by the dynamic-programming tables.
pub trait Count:
    Clone + Ord + Debug + Display + Zero + One + CheckedAdd + CheckedSub + CheckedMul + Send + Sync
{
    fn to_biguint(&self) -> BigUint;
}

macro_rules! prim_count {
    ($($t:ty),*) => {$(
        impl Count for $t {
            fn to_biguint(&self) -> BigUint {
                BigUint::from(*self)
            }
        }
    )*};
}

prim_count!(u32, u64, u128);

impl Count for BigUint {
    fn to_biguint(&self) -> BigUint {
        self.clone()
    }
}

/// Coefficient field of [`crate::series::PolySeries`].
///
/// Division is expected to be field division: `BigRational` is exact,
/// `f64`/`f32` round.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync
{
    fn from_i64(v: i64) -> Self;

    fn from_biguint(v: &BigUint) -> Self;

    /// The value as an integer, when it is one exactly.
    fn to_bigint(&self) -> Option<BigInt>;

    fn from_count<C: Count>(c: &C) -> Self {
        Self::from_biguint(&c.to_biguint())
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_biguint(v: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(v.clone()))
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn from_biguint(v: &BigUint) -> Self {
                v.to_f64().map(|f| f as $t).unwrap_or(<$t>::INFINITY)
            }

            fn to_bigint(&self) -> Option<BigInt> {
                if self.is_finite() && self.fract() == 0.0 {
                    BigInt::from_f64(*self as f64)
                } else {
                    None
                }
            }
        }
    )*};
}

float_scalar!(f32, f64);
