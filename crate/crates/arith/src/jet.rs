use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::ArithError;
use crate::rational::Rational;

/// Dual number `value + derivative·ε` with `ε² = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetRational {
    pub value: Rational,
    pub derivative: Rational,
}

impl JetRational {
    pub fn new(value: Rational, derivative: Rational) -> Self {
        Self { value, derivative }
    }

    pub fn constant(value: Rational) -> Self {
        Self { value, derivative: Rational::zero() }
    }

    /// `value + ε`
    pub fn variable(value: Rational) -> Self {
        Self { value, derivative: Rational::one() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { value: &self.value * r, derivative: &self.derivative * r }
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        Self { value: &self.value + r, derivative: self.derivative.clone() }
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, ArithError> {
        if o.value.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let v = &self.value / &o.value;
        let d = (&self.derivative * &o.value - &self.value * &o.derivative) / (&o.value * &o.value);
        Ok(Self { value: v, derivative: d })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }
}

impl fmt::Display for JetRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.value, self.derivative)
    }
}

impl Add for JetRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { value: self.value + o.value, derivative: self.derivative + o.derivative }
    }
}

impl Sub for JetRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { value: self.value - o.value, derivative: self.derivative - o.derivative }
    }
}

impl Mul for JetRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = &self.value * &o.derivative + &self.derivative * &o.value;
        Self { value: self.value * o.value, derivative: d }
    }
}

impl Neg for JetRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: -self.value, derivative: -self.derivative }
    }
}

impl Zero for JetRational {
    fn zero() -> Self {
        Self::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.derivative.is_zero()
    }
}

impl One for JetRational {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}
