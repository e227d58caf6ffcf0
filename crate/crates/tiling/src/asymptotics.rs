use lozenge_arith::Rational;
use num_traits::ToPrimitive;

use crate::counts::{count_fixed_rhombus, macmahon, HexagonQuery};
use crate::error::TilingError;

/// Limiting proportion `(2/π)·arcsin(1/(a+1))` when `M ≈ aN`.
pub fn arcsine_prediction(a: f64) -> f64 {
    2.0 / std::f64::consts::PI * (1.0 / (a + 1.0)).asin()
}

/// Exact proportion of tilings of the `2n,2n,2n` hexagon containing the
/// rhombus at slot `2n`.
pub fn near_center_proportion(n: u64) -> Result<Rational, TilingError> {
    let big = 2 * n;
    let c = count_fixed_rhombus(HexagonQuery::new(big, big, big)?)?;
    Ok(Rational::new(c, macmahon(big, big, big)))
}

/// `|proportion − prediction(1)|` for the `2n,2n,2n` hexagon.
pub fn arcsine_deviation(n: u64) -> Result<f64, TilingError> {
    let p = near_center_proportion(n)?.to_f64().unwrap_or(f64::NAN);
    Ok((p - arcsine_prediction(1.0)).abs())
}
