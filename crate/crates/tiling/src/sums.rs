use std::fmt;
use std::str::FromStr;

use lozenge_arith::{binomial, int, pochhammer, rat, Rational};
use num_traits::{One, Zero};

use crate::error::TilingError;

/// The three summations that reduce the near-regular cases to binomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumIdentity {
    /// `m = n`
    Summe,
    /// `m = n + 1`
    Summe1,
    /// `m = n − 1`, valid for `n ≥ 2`
    Summe2,
}

impl SumIdentity {
    pub const ALL: [SumIdentity; 3] = [Self::Summe, Self::Summe1, Self::Summe2];
}

impl fmt::Display for SumIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for SumIdentity {
    type Err = TilingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|v| v.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| TilingError::ParameterOutOfRange { what: format!("identity {s}") })
    }
}

/// `Σ_{h<terms} Π (a)_h / Π (b)_h`.
pub fn pochhammer_sum(nums: &[Rational], dens: &[Rational], terms: u64) -> Result<Rational, TilingError> {
    let mut total = Rational::zero();
    for h in 0..terms {
        let mut t = Rational::one();
        for a in nums {
            t *= pochhammer(a, h);
        }
        for b in dens {
            let d = pochhammer(b, h);
            if d.is_zero() {
                return Err(TilingError::ParameterOutOfRange { what: format!("({b})_{h} = 0 in a denominator") });
            }
            t /= d;
        }
        total += t;
    }
    Ok(total)
}

fn b(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// Both sides of the identity at `n`.
pub fn sum_identity_sides(which: SumIdentity, n: u64) -> Result<(Rational, Rational), TilingError> {
    if n == 0 {
        return Err(TilingError::ParameterOutOfRange { what: format!("{which}(n=0)") });
    }
    let ni = n as i64;
    let common = [int(2), rat(3, 2) + int(ni), int(1 - ni)];
    let common_den = [int(1), rat(3, 2) - int(ni), int(2 + ni)];
    let (extra_num, extra_den) = match which {
        SumIdentity::Summe => ([int(1 + 2 * ni), int(1 - 2 * ni)], [int(2 - 2 * ni), int(2 + 2 * ni)]),
        SumIdentity::Summe1 => ([int(2 + 2 * ni), int(-2 * ni)], [int(1 - 2 * ni), int(3 + 2 * ni)]),
        SumIdentity::Summe2 => ([int(2 * ni), int(2 - 2 * ni)], [int(3 - 2 * ni), int(1 + 2 * ni)]),
    };
    let nums: Vec<Rational> = common.into_iter().chain(extra_num).collect();
    let dens: Vec<Rational> = common_den.into_iter().chain(extra_den).collect();
    let lhs = pochhammer_sum(&nums, &dens, n)?;
    let c3 = b(2 * ni, ni).pow(3);
    let rhs = match which {
        SumIdentity::Summe => {
            int((ni + 1) * (2 * ni - 1) * (2 * ni - 1)) / int(2 * ni * ni)
                * (rat(1, 6) + rat(1, 3) * b(6 * ni, 3 * ni) / c3)
        }
        SumIdentity::Summe1 => {
            int((ni + 1) * (ni + 1) * (2 * ni - 1)) / int((2 * ni + 1) * (2 * ni + 1))
                * (rat(-2, 3) + rat(1, 3) * b(6 * ni + 2, 3 * ni + 1) / c3)
        }
        SumIdentity::Summe2 => {
            let c3m = b(2 * ni - 2, ni - 1).pow(3);
            int(2 * ni * (ni + 1)) / int(2 * ni + 1)
                * (int(1) + int(ni) / int(12 * (2 * ni - 1)) * b(6 * ni - 2, 3 * ni - 1) / c3m)
        }
    };
    Ok((lhs, rhs))
}

/// True iff the summation equals its closed form at `n`.
pub fn verify_sum_identity(which: SumIdentity, n: u64) -> bool {
    matches!(sum_identity_sides(which, n), Ok((l, r)) if l == r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(sum_identity_sides(SumIdentity::Summe, 1).unwrap(), (int(1), int(1)));
        assert!(verify_sum_identity(SumIdentity::Summe1, 1));
        assert!(verify_sum_identity(SumIdentity::Summe2, 2));
    }

    #[test]
    fn summe2_fails_at_one() {
        let (l, r) = sum_identity_sides(SumIdentity::Summe2, 1).unwrap();
        assert_eq!((l, r), (int(1), int(2)));
    }

    #[test]
    fn ranges() {
        for n in 1..=12 {
            assert!(verify_sum_identity(SumIdentity::Summe, n), "n={n}");
            assert!(verify_sum_identity(SumIdentity::Summe1, n), "n={n}");
        }
        for n in 2..=12 {
            assert!(verify_sum_identity(SumIdentity::Summe2, n), "n={n}");
        }
    }
}
