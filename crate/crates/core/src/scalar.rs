//! The coefficient-field abstraction shared by the matrix and polynomial layers.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A field usable as matrix entries and polynomial coefficients.
///
/// Exact fields (`BigRational`, [`NfElement`](crate::NfElement)) drive the
/// invariant pipeline. `f64` is provided for quick numerical cross-checks;
/// its `PartialEq` is bitwise and pivots are exact-zero tested, so it is
/// only suitable for well-conditioned input.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero (or a non-unit when the
    /// modulus of a number field is reducible).
    fn inv(&self) -> Option<Self>;

    fn from_rational(q: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Sign (-1, 0, 1) of the first nonzero rational coordinate, constant
    /// coordinate first. Used to pick a canonical sign up to units.
    fn leading_sign(&self) -> i8;

    /// Bracketed coefficient-vector rendering used by the polynomial
    /// print format.
    fn to_coeff_string(&self) -> String;

    /// `self / rhs`; panics on a zero divisor.
    fn div_exact(&self, rhs: &Self) -> Self {
        let inv = rhs.inv().expect("division by zero in Scalar::div_exact");
        self.clone() * &inv
    }
}

fn rational_sign(q: &BigRational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl Scalar for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn leading_sign(&self) -> i8 {
        rational_sign(self)
    }

    fn to_coeff_string(&self) -> String {
        format!("[{self}]")
    }
}

impl Scalar for f64 {
    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn leading_sign(&self) -> i8 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }

    fn to_coeff_string(&self) -> String {
        format!("[{self}]")
    }
}
