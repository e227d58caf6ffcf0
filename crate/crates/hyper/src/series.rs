use std::fmt;

use lozenge_arith::{is_integer, Rational};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::HyperError;

/// `pFq[upper; lower; argument]`, meant to terminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypSeries {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub argument: Rational,
}

fn nonpositive_integer(r: &Rational) -> Option<u64> {
    (is_integer(r) && !r.is_positive()).then(|| (-r).to_integer().to_u64()).flatten()
}

impl HypSeries {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        Self { upper, lower, argument }
    }

    /// Unit-argument series.
    pub fn at_one(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        Self::new(upper, lower, Rational::one())
    }

    /// Smallest `K` with some upper parameter equal to `−K`.
    pub fn termination_index(&self) -> Option<u64> {
        self.upper.iter().filter_map(nonpositive_integer).min()
    }
}

impl fmt::Display for HypSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "{}F{}[{}; {}; {}]",
            self.upper.len(),
            self.lower.len(),
            join(&self.upper),
            join(&self.lower),
            self.argument
        )
    }
}

/// Exact `Σ_{k=0}^{K} Π(a_i)_k / (k! Π(b_j)_k) · z^k`.
///
/// Lower parameters are checked up front: `(b)_k` may only vanish for
/// `k > K`.
pub fn pfq_terminating(s: &HypSeries) -> Result<Rational, HyperError> {
    let big_k = s.termination_index().ok_or(HyperError::NonTerminating)?;
    for b in &s.lower {
        if let Some(m) = nonpositive_integer(b) {
            if m < big_k {
                return Err(HyperError::ZeroDenominatorBeforeTermination { param: b.clone(), index: m + 1 });
            }
        }
    }
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=big_k {
        sum += &term;
        if k == big_k {
            break;
        }
        let kk = Rational::from_integer(k.into());
        let mut num = s.argument.clone();
        let mut den = &kk + Rational::one();
        for a in &s.upper {
            num *= a + &kk;
        }
        for b in &s.lower {
            den *= b + &kk;
        }
        term = term * num / den;
    }
    Ok(sum)
}
