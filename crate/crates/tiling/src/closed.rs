use std::fmt;
use std::str::FromStr;

use lozenge_arith::{int, rat, ArithError, BigInt, Germ, JetRational, Rational};
use num_traits::Zero;

use crate::counts::{integral, macmahon};
use crate::error::TilingError;

/// The six closed-form families, by parity of the sides and axis offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedFormVariant {
    MEven,
    MOdd,
    NEven,
    NOdd,
    NEven2,
    NOdd2,
}

impl ClosedFormVariant {
    pub const ALL: [ClosedFormVariant; 6] = [Self::MEven, Self::MOdd, Self::NEven, Self::NOdd, Self::NEven2, Self::NOdd2];

    /// `(N, M, l)` of the hexagon the formula counts.
    pub fn hexagon(self, n: u64, m: u64) -> (u64, u64, u64) {
        match self {
            Self::MEven => (2 * n, 2 * m, n + m),
            Self::MOdd => (2 * n + 1, 2 * m - 1, n + m),
            Self::NEven => (2 * n, 2 * m - 1, n + m),
            Self::NOdd => (2 * n - 1, 2 * m, n + m),
            Self::NEven2 => (2 * n, 2 * m, n + m + 1),
            Self::NOdd2 => (2 * n + 1, 2 * m - 1, n + m + 1),
        }
    }

    pub fn min_n(self) -> u64 {
        if self == Self::MOdd {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for ClosedFormVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ClosedFormVariant {
    type Err = TilingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|v| v.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| TilingError::ParameterOutOfRange { what: format!("variant {s}") })
    }
}

/// How a closed form was evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Exact,
    /// Limit along `m → m + ε`.
    JetM,
    /// Limit along `n → n + ε`.
    JetN,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Exact => "exact",
            Route::JetM => "jet-m",
            Route::JetN => "jet-n",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormValue {
    /// Proportion of all tilings that contain the rhombus.
    pub proportion: Rational,
    pub count: BigInt,
    pub route: Route,
}

/// Affine parameters `n`, `m` (possibly perturbed by `ε`).
struct Params {
    n: JetRational,
    m: JetRational,
}

impl Params {
    /// `a·n + b·m + c` as a jet.
    fn jet(&self, a: i64, b: i64, c: Rational) -> JetRational {
        (self.n.scale(&int(a)) + self.m.scale(&int(b))).add_rational(&c)
    }

    /// Exact germ of `a·n + b·m + c`.
    fn lin(&self, a: i64, b: i64, c: i64) -> Germ {
        Germ::affine(&self.jet(a, b, int(c)))
    }

    fn binom(&self, x: (i64, i64, i64), y: (i64, i64, i64)) -> Result<Germ, ArithError> {
        Germ::binomial(&self.jet(x.0, x.1, int(x.2)), &self.jet(y.0, y.1, int(y.2)))
    }

    /// Product of linear factors `Π (a·n + b·m + c)`.
    fn prod(&self, factors: &[(i64, i64, i64)]) -> Germ {
        factors.iter().fold(Germ::int(1), |acc, &(a, b, c)| acc * self.lin(a, b, c))
    }

    /// Polynomial `Σ coef · m^i · n^j` known to first order.
    fn poly(&self, terms: &[(i64, u32, u32)]) -> Germ {
        let mut acc = JetRational::constant(Rational::zero());
        for &(c, i, j) in terms {
            acc = acc + (self.m.pow(i) * self.n.pow(j)).scale(&int(c));
        }
        Germ::from_jet(&acc)
    }

    /// `Σ_{h<terms} Π (a_k)_h / Π (b_k)_h`, term ratios taken incrementally.
    fn sum(&self, nums: &[(i64, i64, Rational)], dens: &[(i64, i64, Rational)], terms: u64) -> Result<Germ, ArithError> {
        let num: Vec<JetRational> = nums.iter().map(|(a, b, c)| self.jet(*a, *b, c.clone())).collect();
        let den: Vec<JetRational> = dens.iter().map(|(a, b, c)| self.jet(*a, *b, c.clone())).collect();
        let mut total = Germ::Zero;
        let mut term = Germ::int(1);
        for h in 0..terms {
            if h > 0 {
                let s = int(h as i64 - 1);
                for a in &num {
                    term = term * Germ::affine(&a.add_rational(&s));
                }
                for b in &den {
                    term = term.div(&Germ::affine(&b.add_rational(&s)))?;
                }
            }
            total = total + term.clone();
        }
        Ok(total)
    }
}

fn c(x: i64) -> Rational {
    int(x)
}

fn sum_m(p: &Params, terms: u64) -> Result<Germ, ArithError> {
    p.sum(
        &[(0, 0, c(2)), (-1, 0, c(1)), (1, 0, rat(3, 2)), (-1, -1, c(1)), (1, 1, c(1))],
        &[(0, 0, c(1)), (1, 0, c(2)), (-1, 0, rat(3, 2)), (1, 1, c(2)), (-1, -1, c(2))],
        terms,
    )
}

fn sum_n(p: &Params, terms: u64) -> Result<Germ, ArithError> {
    p.sum(
        &[(0, 0, c(3)), (0, 0, rat(5, 2)), (-1, 0, c(2)), (1, 0, rat(3, 2)), (-1, -1, c(2)), (1, 1, c(1))],
        &[(0, 0, c(1)), (0, 0, rat(3, 2)), (1, 0, c(2)), (-1, 0, rat(5, 2)), (1, 1, c(2)), (-1, -1, c(3))],
        terms,
    )
}

fn sum_n2(p: &Params, terms: u64) -> Result<Germ, ArithError> {
    p.sum(
        &[(0, 0, c(4)), (-1, 0, c(1)), (1, 0, rat(5, 2)), (-1, -1, c(2)), (1, 1, c(2))],
        &[(0, 0, c(1)), (1, 0, c(4)), (-1, 0, rat(5, 2)), (1, 1, c(3)), (-1, -1, c(3))],
        terms,
    )
}

// Auxiliary polynomials as (coefficient, power of m, power of n).
const X_TERMS: &[(i64, u32, u32)] = &[
    (-1, 0, 0), (4, 2, 0), (-3, 4, 0), (-1, 0, 1), (8, 1, 1), (11, 2, 1), (-12, 3, 1), (-6, 4, 1),
    (8, 0, 2), (22, 1, 2), (-4, 2, 2), (-24, 3, 2), (-2, 4, 2), (15, 0, 3), (16, 1, 3), (-28, 2, 3),
    (-8, 3, 3), (-5, 0, 4), (-8, 1, 4), (-12, 2, 4), (-14, 0, 5), (-8, 1, 5), (-2, 0, 6),
];

const Y_TERMS: &[(i64, u32, u32)] = &[
    (1, 0, 0), (-2, 2, 0), (1, 4, 0), (5, 0, 1), (-4, 1, 1), (-2, 2, 1), (4, 3, 1), (-3, 4, 1),
    (22, 0, 2), (-4, 1, 2), (-4, 2, 2), (-12, 3, 2), (-2, 4, 2), (50, 0, 3), (-16, 1, 3), (-26, 2, 3),
    (-8, 3, 3), (39, 0, 4), (-28, 1, 4), (-12, 2, 4), (5, 0, 5), (-8, 1, 5), (-2, 0, 6),
];

fn m_even(p: &Params, n0: u64) -> Result<Germ, ArithError> {
    let pre = p.lin(1, 0, 0) * p.lin(0, 1, 0) * p.binom((2, 0, 0), (1, 0, 0))? * p.binom((2, 0, -1), (1, 0, 0))?
        * p.binom((0, 2, 0), (0, 1, 0))?;
    let pre = pre.div(&p.binom((4, 2, -1), (2, 1, 0))?)?;
    let first = -(Germ::int(1).div(&p.lin(1, 1, 0).pow(2))?);
    let coef = p.lin(4, 0, 2).div(&p.prod(&[(1, 0, 1), (2, 0, -1), (1, 1, -1), (1, 1, 1)]))?;
    Ok(pre * (first + coef * sum_m(p, n0)?))
}

fn m_odd(p: &Params, n0: u64) -> Result<Germ, ArithError> {
    let pre = p.lin(1, 0, 1) * p.lin(0, 1, 0) * p.binom((2, 0, 0), (1, 0, 0))? * p.binom((2, 0, 1), (1, 0, 0))?
        * p.binom((0, 2, -1), (0, 1, 0))?;
    let pre = pre.div(&p.binom((4, 2, 0), (2, 1, 0))?)?;
    let first = Germ::int(1).div(&p.lin(1, 1, 0).pow(2))?;
    let coef = p.lin(4, 0, 0).div(&p.prod(&[(1, 0, 1), (2, 0, -1), (1, 1, -1), (1, 1, 1)]))?;
    Ok(pre * (first + coef * sum_m(p, n0)?))
}

fn n_family(p: &Params, n0: u64, poly: &[(i64, u32, u32)]) -> Result<Germ, ArithError> {
    let pre = p.lin(0, 2, -1) * p.binom((0, 2, -2), (0, 1, -1))? * p.binom((2, 0, -4), (1, 0, -2))?
        * p.binom((2, 0, 2), (1, 0, 1))?;
    let pre = pre.div(&(p.prod(&[(1, 1, -1), (1, 1, 0)]) * p.binom((4, 2, -3), (2, 1, -2))?))?;
    let first = (p.prod(&[(1, 0, 0), (1, 0, 1), (2, 0, -3), (2, 0, -1)]) * p.poly(poly))
        .div(&p.prod(&[(1, 0, -1), (1, 1, -1), (1, 1, 0), (2, 0, 1)]))?;
    let coef = Germ::int(6).div(&p.prod(&[(1, 1, -2), (1, 1, 1)]))?;
    Ok(pre * (first + coef * sum_n(p, n0.saturating_sub(1))?))
}

// m² − m + n + 2mn + n² + 1
const NEVEN_POLY: &[(i64, u32, u32)] = &[(1, 2, 0), (-1, 1, 0), (1, 0, 1), (2, 1, 1), (1, 0, 2), (1, 0, 0)];
// m² − m − 3n + 2mn + n² + 2
const NODD_POLY: &[(i64, u32, u32)] = &[(1, 2, 0), (-1, 1, 0), (-3, 0, 1), (2, 1, 1), (1, 0, 2), (2, 0, 0)];

fn n_even2(p: &Params, n0: u64) -> Result<Germ, ArithError> {
    let num = p.binom((1, 1, -1), (0, 1, 0))? * p.binom((2, 0, 2), (1, 0, -1))? * p.binom((2, 1, -1), (1, 0, 0))?
        * p.binom((2, 1, 0), (2, 0, 1))?;
    let den = Germ::int(2)
        * p.prod(&[(2, 0, -3), (2, 0, -1), (2, 0, 2), (1, 1, -1), (1, 1, 1)])
        * p.binom((4, 0, -1), (2, 0, 0))?
        * p.binom((4, 2, -1), (0, 2, 0))?;
    let pre = num.div(&den)?;
    let first = (Germ::int(2) * p.prod(&[(1, 0, 2), (1, 0, 3), (2, 0, -1), (2, 0, -3)]) * p.poly(X_TERMS))
        .div(&(p.prod(&[(1, 1, -1), (1, 1, 0), (1, 1, 0), (1, 1, 1)])))?;
    let second = (Germ::int(24) * p.prod(&[(0, 1, -1), (2, 1, 1), (2, 0, 1), (2, 0, 3)]))
        .div(&p.prod(&[(1, 1, -2), (1, 1, 2)]))?;
    Ok(pre * (first - second * sum_n2(p, n0)?))
}

fn n_odd2(p: &Params, n0: u64) -> Result<Germ, ArithError> {
    let num = p.binom((0, 2, -1), (0, 1, 0))? * p.binom((1, 1, -1), (0, 1, -1))? * p.binom((2, 0, 2), (1, 0, -1))?
        * p.binom((2, 1, 0), (1, 0, 1))?;
    let den = p.prod(&[(0, 1, 1), (0, 1, 2), (2, 0, -3), (1, 1, -1), (1, 1, 1)])
        * p.binom((2, 1, 0), (0, 1, 2))?
        * p.binom((4, 2, 0), (2, 1, 0))?;
    let pre = num.div(&den)?;
    let first = (p.prod(&[(1, 0, 2), (1, 0, 3), (2, 0, -1), (2, 0, -3)]) * p.poly(Y_TERMS))
        .div(&(p.prod(&[(1, 1, -1), (1, 1, 0), (1, 1, 0), (1, 1, 1)])))?;
    let second = (Germ::int(24) * p.prod(&[(0, 1, -1), (1, 0, 0), (2, 1, 1), (2, 0, 3)]))
        .div(&p.prod(&[(1, 1, -2), (1, 1, 2)]))?;
    Ok(pre * (first - second * sum_n2(p, n0)?))
}

fn proportion_germ(variant: ClosedFormVariant, p: &Params, n0: u64) -> Result<Germ, ArithError> {
    match variant {
        ClosedFormVariant::MEven => m_even(p, n0),
        ClosedFormVariant::MOdd => m_odd(p, n0),
        ClosedFormVariant::NEven => n_family(p, n0, NEVEN_POLY),
        ClosedFormVariant::NOdd => n_family(p, n0, NODD_POLY),
        ClosedFormVariant::NEven2 => n_even2(p, n0),
        ClosedFormVariant::NOdd2 => n_odd2(p, n0),
    }
}

/// Evaluates a closed form, passing to the limit `m → m+ε` (then `n → n+ε`)
/// where the displayed expression has a removable singularity. Summation
/// ranges always stay at the unperturbed integer values.
pub fn closed_form_detailed(variant: ClosedFormVariant, n: u64, m: u64) -> Result<ClosedFormValue, TilingError> {
    if n < variant.min_n() || m < 1 {
        return Err(TilingError::ParameterOutOfRange { what: format!("{variant}(n={n}, m={m})") });
    }
    let routes = [(Route::Exact, 0, 0), (Route::JetM, 0, 1), (Route::JetN, 1, 0)];
    for (route, dn, dm) in routes {
        let p = Params {
            n: JetRational::new(int(n as i64), int(dn)),
            m: JetRational::new(int(m as i64), int(dm)),
        };
        match proportion_germ(variant, &p, n).and_then(|g| g.limit()) {
            Ok(proportion) => {
                let (big_n, big_m, _) = variant.hexagon(n, m);
                let total = Rational::from_integer(macmahon(big_n, big_m, big_n));
                let count = integral(&proportion * total)?;
                return Ok(ClosedFormValue { proportion, count, route });
            }
            Err(_) => continue,
        }
    }
    Err(TilingError::UnresolvedSingularity { what: format!("{variant}(n={n}, m={m})") })
}

pub fn closed_form(variant: ClosedFormVariant, n: u64, m: u64) -> Result<BigInt, TilingError> {
    closed_form_detailed(variant, n, m).map(|v| v.count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::{count_fixed_rhombus, HexagonQuery};

    #[test]
    fn anchors() {
        assert_eq!(closed_form(ClosedFormVariant::MEven, 1, 1).unwrap(), BigInt::from(6));
        let v = closed_form_detailed(ClosedFormVariant::MOdd, 0, 1).unwrap();
        assert_eq!(v.count, BigInt::from(1));
        assert_eq!(v.route, Route::JetM);
        let (big_n, big_m, l) = ClosedFormVariant::NEven2.hexagon(2, 1);
        let det = count_fixed_rhombus(HexagonQuery { n: big_n, m: big_m, l }).unwrap();
        assert_eq!(closed_form(ClosedFormVariant::NEven2, 2, 1).unwrap(), det);
    }

    #[test]
    fn range_checks() {
        assert!(closed_form(ClosedFormVariant::MEven, 0, 1).is_err());
        assert!(closed_form(ClosedFormVariant::NOdd2, 1, 0).is_err());
        assert_eq!("neven2".parse::<ClosedFormVariant>().unwrap(), ClosedFormVariant::NEven2);
    }
}
