use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::gaussian::GaussianRational;
use crate::rational::Rational;

/// Exact field element usable as a matrix or polynomial entry.
///
/// Division by zero panics; callers test `is_zero` first.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Scalar for GaussianRational {
    fn from_rational(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}
