use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Element `re + im·i` of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { re: &self.re * r, im: &self.im * r }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let p = self * o.conj();
        Self { re: p.re / &n, im: p.im / n }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(rat(a, b), rat(c, d))
    }

    #[test]
    fn display() {
        assert_eq!(g(1, 2, -1, 5).to_string(), "1/2-1/5*i");
        assert_eq!(g(0, 1, 3, 1).to_string(), "0+3*i");
    }

    #[test]
    fn i_squared() {
        assert_eq!(GaussianRational::i() * GaussianRational::i(), -GaussianRational::one());
        assert_eq!(GaussianRational::i_pow(-1), -GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(6), -GaussianRational::one());
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = g(3, 2, -7, 3);
        let b = g(-1, 4, 2, 5);
        assert_eq!((a.clone() * b.clone()) / b, a);
        assert_eq!(GaussianRational::one() / GaussianRational::i(), -GaussianRational::i());
        assert_eq!(g(2, 1, 0, 1).norm(), int(4));
    }

    proptest! {
        #[test]
        fn conjugation_is_involution(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let z = g(a, b, c, d);
            prop_assert_eq!(z.conj().conj(), z.clone());
            prop_assert!((z.clone() * z.conj()).is_real());
        }

        #[test]
        fn field_axioms(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9, e in -9i64..9, f in -9i64..9) {
            let x = g(a, 1, b, 1);
            let y = g(c, 2, d, 3);
            let z = g(e, 5, f, 7);
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            if !y.is_zero() {
                prop_assert_eq!((x.clone() / y.clone()) * y, x);
            }
        }
    }
}
