use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::bernoulli::bernoulli_number;
use crate::error::ArithError;
use crate::rational::{int, Rational};

/// Finite Laurent series `Σ c_k B^k` in the umbral symbol `B`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// The symbol `B` itself.
    pub fn b() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c_0 + c_1 B + …` from ordinary coefficients.
    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .fold(Self::zero(), |acc, (k, c)| acc + Self::monomial(c.clone(), k as i64))
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        let slot = self.terms.entry(k).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }
}

/// `(±B + 1)_k` for `k ≥ −1`, where `(±B + 1)_{−1}` means `1/(±B)`.
pub fn shifted_factorial_in_b(sign: i64, k: i64) -> Result<LaurentPolynomial, ArithError> {
    let s = int(sign.signum());
    if sign == 0 || k < -1 {
        return Err(ArithError::UnsupportedShift { base: format!("{sign}B+1"), k });
    }
    if k == -1 {
        return Ok(LaurentPolynomial::monomial(s, -1));
    }
    let mut acc = LaurentPolynomial::one();
    for j in 1..=k {
        let mut f = LaurentPolynomial::monomial(s.clone(), 1);
        f.add_term(0, int(j));
        acc = acc * f;
    }
    Ok(acc)
}

/// Replaces every `c·B^k` by `c·B_k` and sums.
pub fn umbral_eval(p: &LaurentPolynomial) -> Result<Rational, ArithError> {
    if let Some(k) = p.min_exponent().filter(|k| *k < 0) {
        return Err(ArithError::NegativeExponent { exponent: k });
    }
    Ok(p.terms().fold(Rational::zero(), |acc, (k, c)| acc + c * bernoulli_number(k as usize)))
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*B"),
                _ => format!("{c}*B^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for LaurentPolynomial {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (k, c) in o.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Neg for LaurentPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub for LaurentPolynomial {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for LaurentPolynomial {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}
