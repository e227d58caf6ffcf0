//! Floating-point checks for the nonterminating `₂F₁` values that appear in
//! the arcsine asymptotics.

use lozenge_arith::{int, rat, Rational};
use num_traits::ToPrimitive;

use crate::series::{pfq_terminating, HypSeries};

/// Tolerance for the series-versus-closed-form comparisons.
pub const ARCSIN_TOL: f64 = 1e-9;

/// Partial sums of `₂F₁[a, b; c; z]` for `|z| < 1`, stopped once terms are
/// negligible.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> f64 {
    let mut sum = 0.0f64;
    let mut term = 1.0f64;
    for k in 0..1_000_000u32 {
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
        let k = k as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    }
    sum
}

/// `arcsin(√z)/√(z(1−z))`.
pub fn arcsin_closed(z: f64) -> f64 {
    z.sqrt().asin() / (z * (1.0 - z)).sqrt()
}

/// `₂F₁[1,1;3/2;z]` against its arcsine closed form.
pub fn arcsin_identity_check(z: f64) -> bool {
    z > 0.0 && z < 1.0 && (hyp2f1(1.0, 1.0, 1.5, z) - arcsin_closed(z)).abs() < ARCSIN_TOL
}

/// `₂F₁[1,2;5/2;z] = −3/(2z) + 3/(2z)·₂F₁[1,1;3/2;z]`, with the right side
/// through the arcsine.
pub fn five_halves_relation_check(z: f64) -> bool {
    let w = 1.0 / z;
    let rhs = -1.5 * w + 1.5 * w * arcsin_closed(z);
    (hyp2f1(1.0, 2.0, 2.5, z) - rhs).abs() < ARCSIN_TOL
}

/// `₂F₁[1,2;3/2;z] = −1/(2z) + 1/(2z)·₂F₁[1,1;1/2;z]` with
/// `₂F₁[1,1;1/2;z] = 1/(1−z) + √z·arcsin√z/(1−z)^{3/2}`.
pub fn three_halves_relation_check(z: f64) -> bool {
    let w = 1.0 / z;
    let inner = 1.0 / (1.0 - z) + z.sqrt() * z.sqrt().asin() / (1.0 - z).powf(1.5);
    let ok_inner = (hyp2f1(1.0, 1.0, 0.5, z) - inner).abs() < ARCSIN_TOL;
    let rhs = -0.5 * w + 0.5 * w * inner;
    ok_inner && (hyp2f1(1.0, 2.0, 1.5, z) - rhs).abs() < ARCSIN_TOL
}

/// The `₄F₃[1,1,3/2+n,1−n; 2−n−m, 2+n+m, 3/2; 1]` left after Whipple's
/// transformation, exactly.
pub fn near_center_4f3(n: u64, m: u64) -> Rational {
    let (ni, mi) = (n as i64, m as i64);
    let s = HypSeries::at_one(
        vec![int(1), int(1), rat(3, 2) + int(ni), int(1 - ni)],
        vec![int(2 - ni - mi), int(2 + ni + mi), rat(3, 2)],
    );
    pfq_terminating(&s).expect("lower parameters stay clear of zero for n, m ≥ 1")
}

/// `|₄F₃(n, m) − ₂F₁[1,1;3/2;1/(a+1)²]|` with `a = m/n`.
pub fn near_center_gap(n: u64, m: u64) -> f64 {
    let a = m as f64 / n as f64;
    let z = 1.0 / ((a + 1.0) * (a + 1.0));
    (near_center_4f3(n, m).to_f64().unwrap_or(f64::NAN) - arcsin_closed(z)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcsin_points() {
        for z in [0.25, 0.5, 0.01, 0.9] {
            assert!(arcsin_identity_check(z), "z={z}");
        }
        let exact = (std::f64::consts::PI / 6.0) / (3.0f64.sqrt() / 4.0);
        assert!((arcsin_closed(0.25) - exact).abs() < 1e-14);
        assert!(!arcsin_identity_check(0.0));
        assert!(!arcsin_identity_check(1.0));
    }

    #[test]
    fn contiguous_relations() {
        for a in [0.5, 1.0, 2.0, 3.5] {
            let z = 1.0 / ((a + 1.0) * (a + 1.0));
            assert!(five_halves_relation_check(z), "a={a}");
            assert!(three_halves_relation_check(z), "a={a}");
        }
    }
}
