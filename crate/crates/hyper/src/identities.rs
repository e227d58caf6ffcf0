use lozenge_arith::{int, pochhammer, Rational};
use num_traits::{One, Pow, Zero};

use crate::error::HyperError;
use crate::series::{pfq_terminating, HypSeries};

fn nonzero(r: Rational, what: impl FnOnce() -> String) -> Result<Rational, HyperError> {
    if r.is_zero() {
        Err(HyperError::ZeroDenominator { what: what() })
    } else {
        Ok(r)
    }
}

/// `₂F₁[a, −N; c; 1] = (c−a)_N/(c)_N`.
pub fn chu_vandermonde_check(a: &Rational, c: &Rational, n: u64) -> Result<bool, HyperError> {
    let lhs = pfq_terminating(&HypSeries::at_one(vec![a.clone(), -int(n as i64)], vec![c.clone()]))?;
    let den = nonzero(pochhammer(c, n), || format!("({c})_{n}"))?;
    Ok(lhs == pochhammer(&(c - a), n) / den)
}

/// Parameters of the very-well-poised `₇F₆` transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Whipple {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub n: u64,
}

impl Whipple {
    /// The choice that turns the `m`-sum of the near-center formula into a `₄F₃`.
    pub fn near_center(n: u64, m: u64) -> Self {
        let (ni, mi) = (n as i64, m as i64);
        Self {
            a: int(2),
            b: int(1 + ni + mi),
            c: int(1 - ni - mi),
            d: int(1),
            e: int(ni) + Rational::new(3.into(), 2.into()),
            n: n.saturating_sub(1),
        }
    }

    pub fn seven_f_six(&self) -> HypSeries {
        let Self { a, b, c, d, e, n } = self;
        let one = Rational::one();
        let two = int(2);
        HypSeries::at_one(
            vec![a.clone(), &one + a / &two, b.clone(), c.clone(), d.clone(), e.clone(), -int(*n as i64)],
            vec![
                a / &two,
                &one + a - b,
                &one + a - c,
                &one + a - d,
                &one + a - e,
                &one + a + int(*n as i64),
            ],
        )
    }

    pub fn four_f_three(&self) -> HypSeries {
        let Self { a, b, c, d, e, n } = self;
        let one = Rational::one();
        HypSeries::at_one(
            vec![a - b - c + &one, d.clone(), e.clone(), -int(*n as i64)],
            vec![a - b + &one, a - c + &one, -a + d + e - int(*n as i64)],
        )
    }

    pub fn prefactor(&self) -> Result<Rational, HyperError> {
        let Self { a, d, e, n, .. } = self;
        let one = Rational::one();
        let num = pochhammer(&(a + &one), *n) * pochhammer(&(a - d - e + &one), *n);
        let den = pochhammer(&(a - d + &one), *n) * pochhammer(&(a - e + &one), *n);
        Ok(num / nonzero(den, || "Whipple prefactor".into())?)
    }
}

/// Both sides of the transformation.
///
/// Every lower parameter must stay nonzero through index `N`, even when an
/// upper parameter cuts either series off earlier.
pub fn whipple_sides(w: &Whipple) -> Result<(Rational, Rational), HyperError> {
    for s in [w.seven_f_six(), w.four_f_three()] {
        for b in &s.lower {
            if pochhammer(b, w.n).is_zero() {
                return Err(HyperError::ZeroDenominatorBeforeTermination { param: b.clone(), index: w.n });
            }
        }
    }
    let lhs = pfq_terminating(&w.seven_f_six())?;
    let rhs = w.prefactor()? * pfq_terminating(&w.four_f_three())?;
    Ok((lhs, rhs))
}

pub fn whipple_check(w: &Whipple) -> Result<bool, HyperError> {
    whipple_sides(w).map(|(l, r)| l == r)
}

/// `₂F₁[a,−N;c;z]` and `z^N (c−a)_N/(c)_N · ₂F₁[−N, 1−c−N; 1+a−c−N; (z−1)/z]`.
pub fn transform_sides(a: &Rational, c: &Rational, n: u64, z: &Rational) -> Result<(Rational, Rational), HyperError> {
    let nn = int(n as i64);
    let one = Rational::one();
    let lhs = pfq_terminating(&HypSeries::new(vec![a.clone(), -nn.clone()], vec![c.clone()], z.clone()))?;
    let zi = nonzero(z.clone(), || "z = 0".into())?;
    let den = nonzero(pochhammer(c, n), || format!("({c})_{n}"))?;
    let w = (&zi - &one) / &zi;
    let inner = pfq_terminating(&HypSeries::new(
        vec![-nn.clone(), &one - c - &nn],
        vec![&one + a - c - &nn],
        w,
    ))?;
    let rhs = Pow::pow(&zi, n as u32) * pochhammer(&(c - a), n) / den * inner;
    Ok((lhs, rhs))
}

pub fn transform_checks(a: &Rational, c: &Rational, n: u64, z: &Rational) -> Result<bool, HyperError> {
    transform_sides(a, c, n, z).map(|(l, r)| l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_arith::rat;

    #[test]
    fn chu_vandermonde_examples() {
        assert!(chu_vandermonde_check(&int(1), &int(2), 3).unwrap());
        assert!(chu_vandermonde_check(&rat(5, 2), &rat(7, 3), 4).unwrap());
        assert!(chu_vandermonde_check(&rat(-9, 4), &int(11), 0).unwrap());
        // ₂F₁[2, −2; 1; 1] = (−1)_2/(1)_2 = 0
        let s = HypSeries::at_one(vec![int(2), int(-2)], vec![int(1)]);
        assert_eq!(pfq_terminating(&s).unwrap(), int(0));
    }

    #[test]
    fn whipple_near_center() {
        for (n, m) in [(2, 2), (3, 1), (3, 4), (4, 2), (1, 3)] {
            assert!(whipple_check(&Whipple::near_center(n, m)).unwrap(), "n={n} m={m}");
        }
        let w = Whipple { a: rat(1, 3), b: rat(2, 7), c: rat(5, 4), d: int(3), e: rat(-1, 2), n: 0 };
        let (l, r) = whipple_sides(&w).unwrap();
        assert_eq!((l, r), (int(1), int(1)));
    }

    #[test]
    fn transformation_examples() {
        assert!(transform_checks(&int(3), &int(1), 2, &int(1)).unwrap());
        // a = n+3, c = 1, N = n+1 at n = 2
        assert!(transform_checks(&int(5), &int(1), 3, &rat(1, 3)).unwrap());
        assert!(transform_checks(&rat(1, 2), &rat(3, 2), 2, &rat(2, 5)).unwrap());
        assert!(transform_checks(&int(1), &int(1), 2, &int(0)).is_err());
    }
}
