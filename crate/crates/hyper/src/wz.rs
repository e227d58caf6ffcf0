//! The WZ pair behind the `m = n` summation.
//!
//! `n` is allowed to be rational: the certificate relation is an identity of
//! rational functions, so checking it off the integers exercises more of it.

use lozenge_arith::{binomial, int, pochhammer, rat, Rational};
use num_traits::{One, Zero};

fn q(h: u64) -> Rational {
    int(h as i64)
}

/// `F(n,h)`, or `None` where a denominator Pochhammer vanishes.
pub fn wz_summand(n: &Rational, h: u64) -> Option<Rational> {
    let one = Rational::one();
    let two = int(2);
    let half3 = rat(3, 2);
    let num = pochhammer(&two, h)
        * pochhammer(&(&half3 + n), h)
        * pochhammer(&(&one - n), h)
        * pochhammer(&(&one + &two * n), h)
        * pochhammer(&(&one - &two * n), h);
    let den = pochhammer(&one, h)
        * pochhammer(&(&half3 - n), h)
        * pochhammer(&(&two + n), h)
        * pochhammer(&(&two - &two * n), h)
        * pochhammer(&(&two + &two * n), h);
    (!den.is_zero()).then(|| num / den)
}

/// The certificate `G(n,h)`; `None` on a zero denominator.
pub fn wz_certificate(n: &Rational, h: u64) -> Option<Rational> {
    let h = q(h);
    let one = Rational::one();
    let two = int(2);
    let tn = &two * n;
    let den = (&h + &one) * (&h - n) * (&tn - &h) * (&tn - &h + &one) * (&tn + &h + &two);
    if den.is_zero() {
        return None;
    }
    let f = wz_summand(n, h.to_integer().try_into().ok()?)?;
    let p = |e: i32| num_traits::Pow::pow(n, e);
    let hp = |e: i32| num_traits::Pow::pow(&h, e);
    let poly = int(144) * p(5) - int(432) * hp(2) * p(4) - int(432) * &h * p(4) + int(312) * p(4)
        - int(936) * hp(2) * p(3)
        - int(936) * &h * p(3)
        + int(236) * p(3)
        + int(108) * hp(4) * p(2)
        + int(216) * hp(3) * p(2)
        - int(588) * hp(2) * p(2)
        - int(696) * &h * p(2)
        + int(70) * p(2)
        + int(117) * hp(4) * n
        + int(234) * hp(3) * n
        - int(83) * hp(2) * n
        - int(200) * &h * n
        + int(6) * n
        + int(24) * hp(4)
        + int(48) * hp(3)
        + int(6) * hp(2)
        - int(18) * &h;
    let pre = n * (n + &two) * (&tn - &two * &h - &one) * (&tn - &h - &one);
    Some(pre / den * poly * f)
}

fn coefficients(n: &Rational) -> (Rational, Rational) {
    let one = Rational::one();
    let two = int(2);
    let three = int(3);
    let six = int(6);
    let c0 = &six * n * n * (n + &two) * (&six * n + &one) * (&six * n + int(5));
    let t = &two * n - &one;
    let c1 = &six * (n + &one) * &t * &t * (&three * n + &one) * (&three * n + &two);
    (c0, c1)
}

/// `Some(lhs == G(n,i+1) − G(n,i))`, or `None` when a term is undefined.
pub fn wz_relation(n: &Rational, i: u64) -> Option<bool> {
    let (c0, c1) = coefficients(n);
    let lhs = c0 * wz_summand(n, i)? - c1 * wz_summand(&(n + Rational::one()), i)?;
    Some(lhs == wz_certificate(n, i + 1)? - wz_certificate(n, i)?)
}

/// `S(n) = Σ_{h<n} F(n,h)` at integer `n ≥ 1`.
pub fn wz_sum(n: u64) -> Rational {
    let nn = q(n);
    (0..n).map(|h| wz_summand(&nn, h).expect("denominators are nonzero below n")).sum()
}

/// Right-hand side of the telescoped recurrence.
pub fn wz_recurrence_rhs(n: &Rational) -> Rational {
    let one = Rational::one();
    let two = int(2);
    let t = &two * n - &one;
    let cubic = int(36) * n * n * n + int(60) * n * n + int(29) * n + int(3);
    (n + &two) * &t * &t * cubic / (two * (n + one))
}

/// Closed form of `S(n)`.
pub fn summe_closed(n: u64) -> Rational {
    let ni = n as i64;
    let nn = q(n);
    let t = int(2 * ni - 1);
    let c = Rational::from_integer(binomial(2 * ni, ni));
    let ratio = Rational::from_integer(binomial(6 * ni, 3 * ni)) / (&c * &c * &c);
    (&nn + int(1)) * &t * &t / (int(2) * &nn * &nn) * (rat(1, 6) + rat(1, 3) * ratio)
}

/// `S(1), …, S(n_max)` generated from `S(1) = 1` by the recurrence alone.
pub fn summe_from_recurrence(n_max: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut s = Rational::one();
    for n in 1..=n_max {
        out.push(s.clone());
        let nn = q(n);
        let (c0, c1) = coefficients(&nn);
        s = (c0 * s - wz_recurrence_rhs(&nn)) / c1;
    }
    out
}

/// Certificate relation for `1 ≤ n < n_max` at every defined `i ≤ n+1`,
/// the recurrence on directly summed `S(n)`, and regeneration of the closed
/// form from `S(1) = 1`.
pub fn wz_certificate_check(n_max: u64) -> bool {
    let pointwise = (1..n_max).all(|n| (0..=n + 1).all(|i| wz_relation(&q(n), i) != Some(false)));
    let recurrence = (1..n_max).all(|n| {
        let (c0, c1) = coefficients(&q(n));
        c0 * wz_sum(n) - c1 * wz_sum(n + 1) == wz_recurrence_rhs(&q(n))
    });
    let regenerated = summe_from_recurrence(n_max)
        .into_iter()
        .zip(1..)
        .all(|(s, n)| s == summe_closed(n) && s == wz_sum(n));
    pointwise && recurrence && regenerated
}
