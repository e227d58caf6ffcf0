//! Exploration of the conjectured generalisations to `a = 0` (and `b = 0`).
//!
//! Nothing here is asserted as true; the reports only say whether the
//! computed residuals are consistent with the predicted degrees.

use std::fmt;

use lozenge_arith::{int, Poly, Rational};
use num_traits::{One, Zero};

use crate::bernoulli_hankel::{hankel_bernoulli_direct, hankel_bernoulli_product};
use crate::error::OrthoError;

/// Which family is explored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureFamily {
    /// `det(B^{i+j−2}(−B+1)_{c−1}(−B+1)_{d−1})`, residual a polynomial of degree `2(c+d−2)`.
    Polynomial { c: i64, d: i64 },
    /// `det(B^{i+j−1}(B+1)_{b−1}(−B+1)_{c−1}(−B+1)_{d−1})`, residual a rational
    /// function with numerator degree `c+d−2` and denominator degree `b−1`.
    Rational { b: i64, c: i64, d: i64 },
}

impl ConjectureFamily {
    fn params(&self) -> (i64, i64, i64, i64) {
        match *self {
            Self::Polynomial { c, d } => (0, 0, c, d),
            Self::Rational { b, c, d } => (0, b, c, d),
        }
    }

    /// `(numerator degree, denominator degree)` predicted by the conjecture.
    pub fn degree_bounds(&self) -> (usize, usize) {
        match *self {
            Self::Polynomial { c, d } => ((2 * (c + d - 2)).max(0) as usize, 0),
            Self::Rational { b, c, d } => ((c + d - 2).max(0) as usize, (b - 1).max(0) as usize),
        }
    }
}

impl fmt::Display for ConjectureFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Polynomial { c, d } => write!(f, "P(n;{c},{d})"),
            Self::Rational { b, c, d } => write!(f, "R(n;{b},{c},{d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub family: ConjectureFamily,
    /// `residuals[k]` belongs to `n = k + 1`.
    pub residuals: Vec<Rational>,
    /// Lagrange interpolant through all residuals.
    pub interpolant: Poly<Rational>,
    /// `None` when there are too few points to test the degree bound.
    pub bound_holds: Option<bool>,
}

/// Residual = direct determinant divided by the product prefactor, for
/// `1 ≤ n ≤ n_max`; then a degree test on the residual sequence.
pub fn conjecture_explore(family: ConjectureFamily, n_max: usize) -> Result<ConjectureReport, OrthoError> {
    let (a, b, c, d) = family.params();
    if c < 1 || d < 1 || b < 0 || matches!(family, ConjectureFamily::Rational { b, .. } if b < 1) {
        return Err(OrthoError::ParameterOutOfRange { what: format!("{family} needs positive integers") });
    }
    let mut residuals = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let direct = hankel_bernoulli_direct(a, b, c, d, n)?;
        let pre = hankel_bernoulli_product(a, b, c, d, n);
        if pre.is_zero() {
            return Err(OrthoError::ZeroDenominator { what: format!("prefactor at n = {n}") });
        }
        residuals.push(direct / pre);
    }
    let points: Vec<(Rational, Rational)> =
        residuals.iter().enumerate().map(|(k, r)| (int(k as i64 + 1), r.clone())).collect();
    let interpolant = Poly::interpolate(&points);
    let (p, q) = family.degree_bounds();
    let unknowns = p + 1 + q + 1;
    // p(n) − r_n q(n) = 0 is homogeneous; with fewer equations than
    // unknowns it always has a nonzero solution.
    let bound_holds = (points.len() >= unknowns).then(|| {
        let rows: Vec<Vec<Rational>> = points
            .iter()
            .map(|(x, r)| {
                let mut row: Vec<Rational> = (0..=p).map(|e| num_traits::Pow::pow(x, e as u32)).collect();
                row.extend((0..=q).map(|e| -(r * num_traits::Pow::pow(x, e as u32))));
                row
            })
            .collect();
        rank(rows) < unknowns
    });
    Ok(ConjectureReport { family, residuals, interpolant, bound_holds })
}

fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, piv);
        let inv = Rational::one() / &m[r][c];
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                let pivot_row = m[r].clone();
                for (x, p) in m[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
    }
    r
}
