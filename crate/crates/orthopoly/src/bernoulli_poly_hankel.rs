//! `B(N;x) = det_{1≤i,j≤N}(B_{i+j}(x))` and its evaluations at `x = −1, ±1/2`.

use lozenge_arith::{bernoulli_poly, factorial, int, pochhammer, rat, superfactorial, Rational};
use lozenge_detkit::hankel_det;
use lozenge_hyper::{pfq_terminating, HypSeries};
use num_traits::{Pow, Zero};

use crate::bernoulli_hankel::extra_bernoulli_closed;
use crate::error::OrthoError;

fn fact(n: i64) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn sf(n: i64) -> Rational {
    Rational::from_integer(superfactorial(n as u64))
}

fn alt(n: i64) -> Rational {
    if n % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `B(N;x)` by exact elimination.
pub fn bernoulli_poly_hankel(n: usize, x: &Rational) -> Rational {
    let entry = |k: usize| bernoulli_poly(k, x);
    hankel_det(&entry, n, 2)
}

/// `Π_{i=1}^{k} (2i−1)!`
fn odd_factorials(k: i64) -> Rational {
    (1..=k).map(|i| fact(2 * i - 1)).product()
}

/// `N = 2m − 1`, `x = −1/2`.
fn b1(m: i64) -> Rational {
    let pre = alt(m - 1) * fact(2 * m - 1).pow(2u32) * sf(2 * m - 1).pow(4u32) * odd_factorials(m).pow(4u32)
        / (int(2).pow((6 * (m - 1)) as u32) * fact(m - 1).pow(6u32) * sf(4 * m - 1));
    let s = if m == 1 {
        Rational::zero()
    } else {
        pfq_terminating(&HypSeries::at_one(
            vec![int(3), rat(3, 2), int(2 - m), rat(3, 2) + int(m)],
            vec![rat(5, 2), int(2 + m), rat(5, 2) - int(m)],
        ))
        .expect("terminating with nonzero lower parameters")
    };
    let corr = if m == 1 {
        Rational::zero()
    } else {
        int(8 * (m - 1) * (2 * m + 1)) / int(3 * m * (m + 1) * (2 * m - 3) * (2 * m - 1)) * s
    };
    pre * (int(3 + 8 * m) + corr)
}

/// `N = 2m`, `x = −1/2`.
fn b2(m: i64) -> Rational {
    let pre = alt(m) * sf(2 * m).pow(4u32) * odd_factorials(m + 1).pow(4u32)
        / (int(2).pow((6 * m) as u32) * fact(m).pow(6u32) * sf(4 * m + 1));
    let s = pfq_terminating(&HypSeries::at_one(
        vec![int(3), rat(3, 2), int(1 - m), rat(5, 2) + int(m)],
        vec![rat(5, 2), int(3 + m), rat(3, 2) - int(m)],
    ))
    .expect("terminating with nonzero lower parameters");
    pre * (int(1 + 8 * m) - int(8 * m * (2 * m + 3)) / int(3 * (m + 1) * (m + 2) * (2 * m - 1) * (2 * m + 1)) * s)
}

/// `N = 2m − 1`, `x = 1/2`.
fn b3(m: i64) -> Rational {
    let mut pre = fact(2 * m).pow(2u32)
        / (int(2).pow((4 * m - 2) as u32) * fact(m - 1).pow(2u32) * fact(m).pow(2u32));
    for i in 1..=2 * m {
        pre *= fact(i - 1).pow(5u32) / fact(2 * m + i - 1);
    }
    let s: Rational = (0..m)
        .map(|i| alt(m - i) / int(2 * m - 2 * i - 1) * pochhammer(&(rat(1, 2) - int(i)), (2 * i) as u64) / fact(i).pow(2u32))
        .sum();
    pre * s
}

/// `N = 2m`, `x = 1/2`.
fn b4(m: i64) -> Rational {
    let mut pre = fact(2 * m + 2).pow(2u32)
        / (int(2).pow((4 * m + 2) as u32) * fact(m).pow(2u32) * fact(m + 1).pow(2u32));
    for i in 1..=2 * m + 1 {
        pre *= fact(i - 1).pow(5u32) / fact(2 * m + i);
    }
    let s: Rational = (0..=m)
        .map(|i| alt(m - i) / int(2 * m - 2 * i + 1) * pochhammer(&(rat(1, 2) - int(i)), (2 * i) as u64) / fact(i).pow(2u32))
        .sum();
    pre * s
}

/// Closed forms of `B(N;x)` at `x = −1`, `−1/2` and `1/2`.
pub fn bernoulli_poly_hankel_closed(n: usize, x: &Rational) -> Result<Rational, OrthoError> {
    if n == 0 {
        return Err(OrthoError::ParameterOutOfRange { what: "N ≥ 1".into() });
    }
    let big_n = n as i64;
    let odd = big_n % 2 == 1;
    if *x == int(-1) {
        Ok(extra_bernoulli_closed(n))
    } else if *x == rat(-1, 2) {
        Ok(if odd { b1((big_n + 1) / 2) } else { b2(big_n / 2) })
    } else if *x == rat(1, 2) {
        Ok(if odd { b3((big_n + 1) / 2) } else { b4(big_n / 2) })
    } else {
        Err(OrthoError::UnsupportedEvaluationPoint { x: x.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entries() {
        assert_eq!(bernoulli_poly_hankel(1, &int(0)), rat(1, 6));
        assert_eq!(bernoulli_poly_hankel(1, &int(-1)), rat(13, 6));
        assert_eq!(bernoulli_poly_hankel(1, &rat(1, 2)), rat(-1, 12));
    }

    #[test]
    fn closed_anchors() {
        assert_eq!(bernoulli_poly_hankel_closed(1, &int(-1)).unwrap(), rat(13, 6));
        assert_eq!(bernoulli_poly_hankel_closed(1, &rat(-1, 2)).unwrap(), rat(11, 12));
        assert_eq!(bernoulli_poly_hankel_closed(1, &rat(1, 2)).unwrap(), rat(-1, 12));
        assert!(matches!(
            bernoulli_poly_hankel_closed(2, &int(0)),
            Err(OrthoError::UnsupportedEvaluationPoint { .. })
        ));
    }
}
