use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::ArithError;
use crate::jet::JetRational;
use crate::rational::{factorial, harmonic, int, is_integer, Rational};

/// Germ of a function of `ε` at `ε = 0`, kept to first relative order.
///
/// `Term` is `ε^order · (lead + next·ε + O(ε²))` with `lead ≠ 0`; `next` is
/// `None` when cancellation has destroyed it. `Small(k)` is an unknown
/// quantity of size `O(ε^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Germ {
    Zero,
    Term { order: i32, lead: Rational, next: Option<Rational> },
    Small(i32),
}

impl Germ {
    pub fn constant(r: Rational) -> Self {
        if r.is_zero() {
            Germ::Zero
        } else {
            Germ::Term { order: 0, lead: r, next: Some(Rational::zero()) }
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// Exact germ of the affine function `value + derivative·ε`.
    pub fn affine(j: &JetRational) -> Self {
        if !j.value.is_zero() {
            Germ::Term { order: 0, lead: j.value.clone(), next: Some(j.derivative.clone()) }
        } else if !j.derivative.is_zero() {
            Germ::Term { order: 1, lead: j.derivative.clone(), next: Some(Rational::zero()) }
        } else {
            Germ::Zero
        }
    }

    /// Germ of a smooth function known only through its first-order jet.
    pub fn from_jet(j: &JetRational) -> Self {
        if !j.value.is_zero() {
            Germ::Term { order: 0, lead: j.value.clone(), next: Some(j.derivative.clone()) }
        } else if !j.derivative.is_zero() {
            Germ::Term { order: 1, lead: j.derivative.clone(), next: None }
        } else {
            Germ::Small(2)
        }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        match self {
            Germ::Term { order, lead, next } => {
                let l = Rational::one() / lead;
                let n = next.as_ref().map(|n| -(n * &l * &l));
                Ok(Germ::Term { order: -order, lead: l, next: n })
            }
            Germ::Zero => Err(ArithError::DivisionByZero),
            Germ::Small(_) => Err(ArithError::UnresolvedSingularity),
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self, ArithError> {
        Ok(self.clone() * o.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Germ::int(1), |acc, _| acc * self.clone())
    }

    /// Value at `ε = 0`; fails on a pole or an undetermined constant term.
    pub fn limit(&self) -> Result<Rational, ArithError> {
        match self {
            Germ::Zero => Ok(Rational::zero()),
            Germ::Term { order, lead, .. } => match order.signum() {
                1 => Ok(Rational::zero()),
                0 => Ok(lead.clone()),
                _ => Err(ArithError::UnresolvedSingularity),
            },
            Germ::Small(k) if *k >= 1 => Ok(Rational::zero()),
            Germ::Small(_) => Err(ArithError::UnresolvedSingularity),
        }
    }

    /// `Γ(x)·exp(γ·(x − x₀))` for `x = x₀ + βε` with integral `x₀`.
    ///
    /// The exponential factor cancels in every balanced ratio such as a
    /// binomial coefficient, which keeps all coefficients rational.
    pub fn gamma(x: &JetRational) -> Result<Self, ArithError> {
        if !is_integer(&x.value) {
            return Err(ArithError::UnsupportedShift { base: x.value.to_string(), k: 0 });
        }
        let j: i64 = x.value.numer().try_into().map_err(|_| ArithError::UnresolvedSingularity)?;
        let beta = &x.derivative;
        if j >= 1 {
            let f = Rational::from_integer(factorial((j - 1) as u64));
            let next = &f * beta * harmonic((j - 1) as u64);
            return Ok(Germ::Term { order: 0, lead: f, next: Some(next) });
        }
        if beta.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let k = (-j) as u64;
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let kf = Rational::from_integer(factorial(k));
        let lead = &sign / (&kf * beta);
        let next = sign * harmonic(k) / kf;
        Ok(Germ::Term { order: -1, lead, next: Some(next) })
    }

    /// `C(x, y) = Γ(x+1)/(Γ(y+1)Γ(x−y+1))` on affine arguments.
    pub fn binomial(x: &JetRational, y: &JetRational) -> Result<Self, ArithError> {
        let one = Rational::one();
        let xm = x.clone() - y.clone();
        if is_integer(&x.value) && x.derivative.is_zero() && y.derivative.is_zero() && is_integer(&y.value) {
            let n = x.value.numer();
            let k = y.value.numer();
            if !n.is_negative() {
                let n: i64 = n.try_into().map_err(|_| ArithError::UnresolvedSingularity)?;
                let k: i64 = k.try_into().map_err(|_| ArithError::UnresolvedSingularity)?;
                return Ok(Germ::constant(Rational::from_integer(crate::rational::binomial(n, k))));
            }
        }
        let num = Self::gamma(&x.add_rational(&one))?;
        let d1 = Self::gamma(&y.add_rational(&one))?;
        let d2 = Self::gamma(&xm.add_rational(&one))?;
        num.div(&(d1 * d2))
    }
}

impl Add for Germ {
    type Output = Germ;
    fn add(self, o: Germ) -> Germ {
        use Germ::*;
        match (self, o) {
            (Zero, x) | (x, Zero) => x,
            (Small(k), Small(l)) => Small(k.min(l)),
            (Small(k), Term { order, lead, next }) | (Term { order, lead, next }, Small(k)) => {
                if order < k {
                    Term { order, lead, next: if order + 1 < k { next } else { None } }
                } else {
                    Small(k)
                }
            }
            (Term { order: oa, lead: la, next: na }, Term { order: ob, lead: lb, next: nb }) => {
                if oa < ob {
                    let next = if ob == oa + 1 { na.map(|n| n + lb) } else { na };
                    Term { order: oa, lead: la, next }
                } else if ob < oa {
                    let next = if oa == ob + 1 { nb.map(|n| n + la) } else { nb };
                    Term { order: ob, lead: lb, next }
                } else {
                    let s0 = la + lb;
                    let s1 = match (na, nb) {
                        (Some(a), Some(b)) => Some(a + b),
                        _ => None,
                    };
                    if !s0.is_zero() {
                        Term { order: oa, lead: s0, next: s1 }
                    } else {
                        match s1 {
                            Some(x) if !x.is_zero() => Term { order: oa + 1, lead: x, next: None },
                            Some(_) => Small(oa + 2),
                            None => Small(oa + 1),
                        }
                    }
                }
            }
        }
    }
}

impl Neg for Germ {
    type Output = Germ;
    fn neg(self) -> Germ {
        match self {
            Germ::Term { order, lead, next } => Germ::Term { order, lead: -lead, next: next.map(|n| -n) },
            other => other,
        }
    }
}

impl Sub for Germ {
    type Output = Germ;
    fn sub(self, o: Germ) -> Germ {
        self + (-o)
    }
}

impl Mul for Germ {
    type Output = Germ;
    fn mul(self, o: Germ) -> Germ {
        use Germ::*;
        match (self, o) {
            (Zero, _) | (_, Zero) => Zero,
            (Small(k), Small(l)) => Small(k + l),
            (Small(k), Term { order, .. }) | (Term { order, .. }, Small(k)) => Small(k + order),
            (Term { order: oa, lead: la, next: na }, Term { order: ob, lead: lb, next: nb }) => {
                let next = match (na, nb) {
                    (Some(a), Some(b)) => Some(&la * b + a * &lb),
                    _ => None,
                };
                Term { order: oa + ob, lead: la * lb, next }
            }
        }
    }
}
