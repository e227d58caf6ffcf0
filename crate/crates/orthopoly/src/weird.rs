//! A two-line identity mixing a single sum and a harmonic-weighted sum.

use lozenge_arith::{factorial, int, Rational};

fn fact(n: i64) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn alt(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_{j=0}^{n} 1/(j+1)`
fn h(n: i64) -> Rational {
    (0..=n).map(|j| Rational::new(1.into(), (j + 1).into())).sum()
}

/// `n!/(n+3)! Σ_{k<n} (−1)^k (n+k+4)! (1−(−1)^n(n+2)) / ((k+1)(k+2)!²(n−k−1)!)`
pub fn weird_first_line(n: u64) -> Rational {
    let n = n as i64;
    let f = int(1 - alt(n) * (n + 2));
    let s: Rational = (0..n)
        .map(|k| int(alt(k)) * fact(n + k + 4) * &f / (int(k + 1) * fact(k + 2) * fact(k + 2) * fact(n - k - 1)))
        .sum();
    fact(n) / fact(n + 3) * s
}

/// `Σ_{k<n} (−1)^{n+k} (n+k+4)! / ((k+2)!(k+3)!(n−k−1)!) · Σ_{j≤k} 1/(j+1)`
pub fn weird_second_line(n: u64) -> Rational {
    let n = n as i64;
    (0..n)
        .map(|k| int(alt(n + k)) * fact(n + k + 4) / (fact(k + 2) * fact(k + 3) * fact(n - k - 1)) * h(k))
        .sum()
}

/// Left-hand side: both lines together.
pub fn lemma_weird_lhs(n: u64) -> Rational {
    weird_first_line(n) + weird_second_line(n)
}

/// `(−1)^n(n+2) − 2`
pub fn lemma_weird_rhs(n: u64) -> Rational {
    let n = n as i64;
    int(alt(n) * (n + 2) - 2)
}

/// Closed value of the first line.
pub fn simplesum_closed(n: u64) -> Rational {
    let n = n as i64;
    let num = alt(n) + 2 * n.pow(3) + 11 * n * n + 19 * n + 11;
    let den = (n + 1) * (n + 2) * (n + 3);
    int(1 - alt(n) * (n + 2)) * (int(2) * h(n) - Rational::new(num.into(), den.into()))
}

/// Closed value of the second line.
pub fn doublesum_closed(n: u64) -> Rational {
    let n = n as i64;
    -Rational::new((1 + alt(n) * (n * n + 3 * n + 3)).into(), (n + 2).into()) - int(1 - alt(n) * (n + 2)) * int(2) * h(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        assert_eq!(lemma_weird_lhs(0), int(0));
        assert_eq!(lemma_weird_rhs(0), int(0));
        assert_eq!(lemma_weird_lhs(1), int(-5));
        assert_eq!(weird_first_line(1), int(5));
        assert_eq!(weird_second_line(1), int(-10));
        assert_eq!(lemma_weird_lhs(7), int(-11));
    }

    #[test]
    fn partial_results() {
        for n in 0..10 {
            assert_eq!(weird_first_line(n), simplesum_closed(n), "n={n}");
            assert_eq!(weird_second_line(n), doublesum_closed(n), "n={n}");
        }
    }
}
