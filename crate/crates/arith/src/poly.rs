use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::rational::{int, Rational};
use crate::scalar::Scalar;

/// Dense univariate polynomial; `coeffs[k]` multiplies `x^k`.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients
/// and `degree()` returns `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_rational(int(k as i64)))
                .collect(),
        )
    }

    /// `p(c·x)`.
    pub fn substitute_scaled(&self, c: &T) -> Self {
        let mut f = T::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * f.clone());
            f = f * c.clone();
        }
        Self::new(out)
    }

    /// `p(−x)`.
    pub fn reflect(&self) -> Self {
        self.substitute_scaled(&-T::one())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<Rational> {
    /// Lagrange interpolant through `(x_i, y_i)` with distinct nodes.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let lin = Self::new(vec![-xj.clone(), Rational::one()]);
                    basis = basis * lin;
                    basis = basis.scale(&(Rational::one() / (xi.clone() - xj.clone())));
                }
            }
            acc = acc + basis;
        }
        acc
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational;
    use crate::rational::rat;
    use num_traits::Zero;

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn arithmetic() {
        // (1 + x)(1 − x) = 1 − x²
        assert_eq!(p(&[1, 1]) * p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
        assert_eq!(p(&[1, 2, 3]).eval(&int(2)), int(17));
        assert_eq!(p(&[1, 2, 3]).reflect(), p(&[1, -2, 3]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let q = p(&[3, 0, -2, 1]);
        let pts: Vec<_> = (0..6).map(|x| (int(x), q.eval(&int(x)))).collect();
        assert_eq!(Poly::interpolate(&pts), q);
        let pts: Vec<_> = (0..2).map(|x| (int(x), rat(1, 2))).collect();
        assert_eq!(Poly::interpolate(&pts).degree(), Some(0));
    }

    #[test]
    fn gaussian_coefficients() {
        let i = GaussianRational::i();
        let q = Poly::new(vec![i.clone(), GaussianRational::one()]);
        // (x + i)(x − i) = x² + 1
        let r = q.clone() * Poly::new(vec![-i, GaussianRational::one()]);
        assert_eq!(r.coeff(0), GaussianRational::one());
        assert_eq!(r.coeff(1), GaussianRational::zero());
    }
}
