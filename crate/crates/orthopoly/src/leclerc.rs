//! Wronskians of orthogonal polynomials against Hankel determinants of
//! binomially shifted moments.

use lozenge_arith::{binomial, factorial, Poly, Rational};
use lozenge_detkit::{det_exact, hankel_det, Matrix, MomentSequence};
use num_traits::One;

use crate::favard::moment_determinant_poly;

/// `Q_n(x) = Σ_k μ_k C(n,k) (−x)^{n−k}`.
pub fn leclerc_q(mu: &impl MomentSequence<Rational>, n: usize) -> Poly<Rational> {
    let mut coeffs = vec![Rational::from_integer(0.into()); n + 1];
    for k in 0..=n {
        let e = n - k;
        let sign = if e % 2 == 0 { 1 } else { -1 };
        coeffs[e] = mu.moment(k) * Rational::from_integer(binomial(n as i64, k as i64) * sign);
    }
    Poly::new(coeffs)
}

/// `C_{l,m} = (−1)^{lm} Π_{k=1}^{m−1} k! det_{0≤i,j≤k+l−1}(μ_{i+j})`.
pub fn leclerc_constant(mu: &impl MomentSequence<Rational>, l: usize, m: usize) -> Rational {
    let mut c = if (l * m) % 2 == 0 { Rational::one() } else { -Rational::one() };
    for k in 1..m {
        c *= Rational::from_integer(factorial(k as u64)) * hankel_det(mu, k + l, 0);
    }
    c
}

fn nth_derivative(p: &Poly<Rational>, i: usize) -> Poly<Rational> {
    (0..i).fold(p.clone(), |q, _| q.derivative())
}

/// `(det_{0≤i,j<m} P_{l+j}^{(i)}(x), C_{l,m} det_{0≤i,j<l} Q_{m+i+j}(x))`.
pub fn leclerc_sides(mu: &impl MomentSequence<Rational>, l: usize, m: usize, x: &Rational) -> (Rational, Rational) {
    let p: Vec<Poly<Rational>> = (0..m).map(|j| moment_determinant_poly(mu, l + j)).collect();
    let lhs = det_exact(&Matrix::from_fn(m, m, |i, j| nth_derivative(&p[j - 1], i - 1).eval(x))).expect("square");
    let q: Vec<Rational> = (0..2 * l.max(1)).map(|k| leclerc_q(mu, m + k).eval(x)).collect();
    let hank = det_exact(&Matrix::from_fn(l, l, |i, j| q[i + j - 2].clone())).expect("square");
    (lhs, leclerc_constant(mu, l, m) * hank)
}

pub fn leclerc_check(mu: &impl MomentSequence<Rational>, l: usize, m: usize, x: &Rational) -> bool {
    let (lhs, rhs) = leclerc_sides(mu, l, m, x);
    lhs == rhs
}
