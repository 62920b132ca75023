use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::MultiPoly;

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Coefficient ring shared by the numeric and the symbolic code paths.
///
/// Every tensor operation in this crate is written once against this trait
/// and instantiated with [`Rational`] for concrete maps and with
/// [`MultiPoly`] when components are indeterminates.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    /// Multiplies by a rational constant.
    fn scale(&self, r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

/// A [`Scalar`] that can round-trip through [`MultiPoly`].
///
/// Constructions defined by polynomial identities (expand, divide, read off
/// coefficients) lift their input into polynomials and convert back.
pub trait PolyScalar: Scalar {
    fn to_poly(&self) -> MultiPoly;

    /// Converts back; `None` if the polynomial is not representable
    /// (e.g. a non-constant polynomial for [`Rational`]).
    fn from_poly(p: MultiPoly) -> Option<Self>;
}

impl PolyScalar for Rational {
    fn to_poly(&self) -> MultiPoly {
        MultiPoly::constant(self.clone())
    }

    fn from_poly(p: MultiPoly) -> Option<Self> {
        p.as_constant()
    }
}

impl PolyScalar for MultiPoly {
    fn to_poly(&self) -> MultiPoly {
        self.clone()
    }

    fn from_poly(p: MultiPoly) -> Option<Self> {
        Some(p)
    }
}
