//! Exact scalar and polynomial arithmetic.
//!
//! Everything here is exact: prime fields for code coordinates, big rationals
//! and the quadratic field Q(√2) for invariant theory, and polynomials over
//! those fields.

pub mod gf;
pub mod matrix;
pub mod multipoly;
mod parse;
pub mod quad;
pub mod ratfunc;
pub mod unipoly;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use gf::{FieldElement, FpMatrix, PrimeField};
pub use matrix::Matrix;
pub use multipoly::{Monomial, MultiPoly};
pub use quad::QuadElement;
pub use ratfunc::RationalFunction;
pub use unipoly::UniPoly;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = BigRational;

/// A commutative field with exact arithmetic and decidable equality.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
    fn from_int(v: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `Some(i)` when `r` is an integer that fits in `i64`.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.to_integer()).ok()
}

/// Formats a rational as `n` or `n/d`; callers handle the sign when they need
/// to print it separately.
pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
