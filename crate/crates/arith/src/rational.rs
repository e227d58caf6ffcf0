use num_bigint::BigInt;
#[cfg(test)]
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bernoulli::bernoulli_number;
use crate::error::ArithError;

/// Arbitrary-precision fraction, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`; panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn to_integer(r: &Rational) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

/// Renders `p/q`, or `p` when the denominator is 1.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p`, `p/q` or a terminating decimal such as `-0.5`.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let t = s.trim();
    let bad = || ArithError::Parse(s.to_string());
    if let Some((whole, frac)) = t.split_once('.') {
        let neg = whole.starts_with('-');
        let whole = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let w: BigInt = if whole.is_empty() { BigInt::zero() } else { whole.parse().map_err(|_| bad())? };
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let v = Rational::new(w * &scale + f, scale);
        return Ok(if neg { -v } else { v });
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `Π_{i=1}^{n} i!`
pub fn superfactorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut f = BigInt::one();
    for i in 1..=n {
        f *= i;
        acc *= &f;
    }
    acc
}

/// Binomial coefficient for `n ≥ 0`; zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `Σ_{j=1}^{n} 1/j`
pub fn harmonic(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, j| acc + rat(1, j as i64))
}

/// Rising factorial `a(a+1)⋯(a+k−1)`.
pub fn pochhammer(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut t = a.clone();
    for _ in 0..k {
        acc *= &t;
        if acc.is_zero() {
            break;
        }
        t += Rational::one();
    }
    acc
}

/// `Σ_{s=−a}^{b−1} s^m`, zero when the range is empty.
pub fn power_sum(a: i64, b: i64, m: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for s in -a..b {
        acc += num_traits::pow(BigInt::from(s), m as usize);
    }
    acc
}

/// Bernoulli-number form of `Σ_{s=−n}^{n−1} s^m`, valid for rational `n`.
pub fn power_sum_bernoulli_form(n: &Rational, m: u32) -> Rational {
    let mut acc = Rational::zero();
    let neg = -n.clone();
    for l in 0..=m {
        let b = bernoulli_number((m - l) as usize);
        if b.is_zero() {
            continue;
        }
        let c = Rational::from_integer(binomial(m as i64, l as i64));
        let e = (l + 1) as i32;
        let diff = num_traits::Pow::pow(n, e) - num_traits::Pow::pow(&neg, e);
        acc += c * b * diff / int(l as i64 + 1);
    }
    acc
}

#[cfg(test)]
pub(crate) fn gcd_is_one(a: &BigInt, b: &BigInt) -> bool {
    num_traits::Signed::abs(&a.gcd(b)).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        // 1!·2!·3! = 12
        assert_eq!(superfactorial(3), BigInt::from(12));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(2), 3), int(24));
        assert_eq!(pochhammer(&int(-3), 5), int(0));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1, 1, 1), BigInt::from(-1));
        assert_eq!(power_sum(2, 2, 2), BigInt::from(6));
        assert_eq!(power_sum(2, 2, 0), BigInt::from(4));
        assert_eq!(power_sum(-3, 2, 4), BigInt::zero());
    }

    #[test]
    fn bernoulli_form_matches_power_sums() {
        assert_eq!(power_sum_bernoulli_form(&int(1), 1), int(-1));
        assert_eq!(power_sum_bernoulli_form(&int(2), 2), int(6));
        assert_eq!(power_sum_bernoulli_form(&int(0), 5), int(0));
        for n in 0..=6i64 {
            for m in 0..=12u32 {
                let direct = Rational::from_integer(power_sum(n, n, m));
                assert_eq!(power_sum_bernoulli_form(&int(n), m), direct, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(4), rat(25, 12));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_rational(&rat(6, -4)), "-3/2");
        assert_eq!(fmt_rational(&int(5)), "5");
    }

    #[test]
    fn lowest_terms_invariant() {
        let r = rat(12, -18);
        assert!(r.denom().is_positive());
        assert!(gcd_is_one(r.numer(), r.denom()));
    }
}
