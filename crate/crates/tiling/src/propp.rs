use std::fmt;
use std::str::FromStr;

use lozenge_arith::{binomial, int, BigInt, Rational};

use crate::closed::{closed_form, ClosedFormVariant};
use crate::counts::{integral, macmahon};
use crate::error::TilingError;

/// Near-center rhombus counts for nearly regular hexagons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProppVariant {
    /// Sides all `2n`.
    ProppEven,
    /// Sides all `2n+1`.
    ProppOdd,
    /// Sides `2n, 2n+2, 2n, …`.
    ProppEven1,
    /// Sides `2n+1, 2n−1, 2n+1, …`.
    ProppOdd1,
    /// Sides `2n+2, 2n, 2n+2, …`.
    ProppEven2,
    /// Sides `2n+3, 2n−1, 2n+3, …`.
    ProppOdd2,
}

impl ProppVariant {
    pub const ALL: [ProppVariant; 6] =
        [Self::ProppEven, Self::ProppOdd, Self::ProppEven1, Self::ProppOdd1, Self::ProppEven2, Self::ProppOdd2];

    pub fn min_n(self) -> u64 {
        match self {
            Self::ProppOdd => 0,
            _ => 1,
        }
    }

    /// The general family and its `(n, m)` arguments.
    pub fn theorem_args(self, n: u64) -> (ClosedFormVariant, u64, u64) {
        match self {
            Self::ProppEven => (ClosedFormVariant::MEven, n, n),
            Self::ProppOdd => (ClosedFormVariant::MOdd, n, n + 1),
            Self::ProppEven1 => (ClosedFormVariant::MEven, n, n + 1),
            Self::ProppOdd1 => (ClosedFormVariant::MOdd, n, n),
            Self::ProppEven2 => (ClosedFormVariant::MEven, n + 1, n),
            Self::ProppOdd2 => (ClosedFormVariant::MOdd, n + 1, n),
        }
    }

    /// `(N, M)` of the hexagon.
    pub fn sides(self, n: u64) -> (u64, u64) {
        let (v, a, b) = self.theorem_args(n);
        let (big_n, big_m, _) = v.hexagon(a, b);
        (big_n, big_m)
    }
}

impl fmt::Display for ProppVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ProppVariant {
    type Err = TilingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|v| v.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| TilingError::ParameterOutOfRange { what: format!("variant {s}") })
    }
}

fn b(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n as i64, k as i64))
}

/// Proportion of tilings containing the rhombus, as displayed.
pub fn propp_proportion(variant: ProppVariant, n: u64) -> Result<Rational, TilingError> {
    if n < variant.min_n() {
        return Err(TilingError::ParameterOutOfRange { what: format!("{variant}(n={n})") });
    }
    let third = Rational::new(1.into(), 3.into());
    let c3 = b(2 * n, n).pow(3);
    let ni = n as i64;
    let corr = match variant {
        ProppVariant::ProppEven => -Rational::new(1.into(), 12.into()) * c3 / b(6 * n, 3 * n),
        ProppVariant::ProppOdd => third.clone() * c3 / b(6 * n + 2, 3 * n + 1),
        ProppVariant::ProppEven1 => -(int(10 * ni + 2) / int(6 * ni + 3)) * c3 / b(6 * n + 2, 3 * n + 1),
        ProppVariant::ProppOdd1 => int(10 * ni + 3) / int(24 * ni) * c3 / b(6 * n, 3 * n),
        ProppVariant::ProppEven2 => int(4) * c3 / b(6 * n + 4, 3 * n + 2),
        ProppVariant::ProppOdd2 => {
            int(2 * (6 * ni * ni + 9 * ni + 2)) / int((ni + 1) * (ni + 1)) * c3 / b(6 * n + 4, 3 * n + 2)
        }
    };
    Ok(third + corr)
}

pub fn propp_closed_form(variant: ProppVariant, n: u64) -> Result<BigInt, TilingError> {
    let p = propp_proportion(variant, n)?;
    let (big_n, big_m) = variant.sides(n);
    integral(p * Rational::from_integer(macmahon(big_n, big_m, big_n)))
}

/// The same count through the general theorem it specialises.
pub fn propp_via_theorem(variant: ProppVariant, n: u64) -> Result<BigInt, TilingError> {
    let (v, a, m) = variant.theorem_args(n);
    closed_form(v, a, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        assert_eq!(propp_closed_form(ProppVariant::ProppEven, 1).unwrap(), BigInt::from(6));
        assert_eq!(propp_closed_form(ProppVariant::ProppOdd, 0).unwrap(), BigInt::from(1));
        assert!(propp_closed_form(ProppVariant::ProppOdd1, 0).is_err());
        assert_eq!(ProppVariant::ProppOdd2.sides(2), (7, 3));
    }
}
