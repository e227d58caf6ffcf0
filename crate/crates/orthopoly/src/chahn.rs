//! Continuous Hahn polynomials through their terminating `₃F₂` form.

use lozenge_arith::{factorial, int, pochhammer, GaussianRational, Poly, Rational};
use num_traits::Zero;

use crate::error::OrthoError;
use crate::moments::HahnParams;

fn nonzero(r: Rational, what: impl FnOnce() -> String) -> Result<Rational, OrthoError> {
    if r.is_zero() {
        Err(OrthoError::ZeroDenominator { what: what() })
    } else {
        Ok(r)
    }
}

/// `p_n(a,b,c,d;x)`, monic of degree `n`.
pub fn chahn_poly(p: &HahnParams, n: usize) -> Result<Poly<GaussianRational>, OrthoError> {
    let HahnParams { a, b: _, c, d } = p;
    let nn = n as u64;
    let s = p.sum();
    let top = &s + int(n as i64 - 1);
    let ac = a + c;
    let ad = a + d;
    let mut acc = Poly::zero();
    // (a + x√−1)_k built up incrementally
    let mut rising = Poly::one();
    for k in 0..=nn {
        let num = pochhammer(&int(-(n as i64)), k) * pochhammer(&top, k);
        let den = nonzero(pochhammer(&ac, k) * pochhammer(&ad, k), || format!("(a+c)_{k}(a+d)_{k}"))?
            * Rational::from_integer(factorial(k));
        acc = acc + rising.scale(&GaussianRational::real(num / den));
        let shift = GaussianRational::real(a + int(k as i64));
        rising = rising * Poly::new(vec![shift, GaussianRational::i()]);
    }
    let pre = pochhammer(&ac, nn) * pochhammer(&ad, nn)
        / nonzero(pochhammer(&top, nn), || format!("(a+b+c+d+n−1)_{n}"))?;
    Ok(acc.scale(&(GaussianRational::i_pow(n as i64).scale(&pre))))
}

/// `A_n` of the recurrence, a purely imaginary number.
pub fn chahn_a(p: &HahnParams, n: usize) -> Result<GaussianRational, OrthoError> {
    let HahnParams { a, b, c, d } = p;
    let s = p.sum();
    let nn = int(n as i64);
    let one = int(1);
    let two_n = int(2 * n as i64);
    let first = if n == 0 {
        Rational::zero()
    } else {
        let den = (&s + &two_n - int(2)) * (&s + &two_n - &one);
        &nn * (b + c + &nn - &one) * (b + d + &nn - &one) / nonzero(den, || format!("A_{n} first denominator"))?
    };
    let den = (&s + &two_n - &one) * (&s + &two_n);
    let second = (&one - &s - &nn) * (a + c + &nn) * (a + d + &nn) / nonzero(den, || format!("A_{n} second denominator"))?;
    Ok(GaussianRational::new(Rational::zero(), a + first + second))
}

/// `B_n` exactly as displayed with the Hahn recurrence, including its
/// leading minus sign.
pub fn chahn_b_displayed(p: &HahnParams, n: usize) -> Result<GaussianRational, OrthoError> {
    if n == 0 {
        return Ok(GaussianRational::zero());
    }
    let HahnParams { a, b, c, d } = p;
    let s = p.sum();
    let nn = int(n as i64);
    let one = int(1);
    let two_n = int(2 * n as i64);
    let num = &nn
        * (a + c + &nn - &one)
        * (b + c + &nn - &one)
        * (a + d + &nn - &one)
        * (b + d + &nn - &one)
        * (&s + &nn - int(2));
    let mid = &s + &two_n - int(2);
    let den = (&s + &two_n - int(3)) * &mid * &mid * (&s + &two_n - &one);
    Ok(GaussianRational::real(-(num / nonzero(den, || format!("B_{n} denominator"))?)))
}

/// `(A_n, B_n)` with `p_{n+1} = (x − A_n) p_n − B_n p_{n−1}`.
///
/// The displayed `B_n` carries a spurious minus sign; the value returned
/// here is its negative, which is what the polynomials actually satisfy.
pub fn chahn_recurrence_coeffs(p: &HahnParams, n: usize) -> Result<(GaussianRational, GaussianRational), OrthoError> {
    Ok((chahn_a(p, n)?, -chahn_b_displayed(p, n)?))
}

/// Checks `p_{k+1} = (x − A_k) p_k − B_k p_{k−1}` for `k < n_max`.
pub fn chahn_recurrence_holds(p: &HahnParams, n_max: usize) -> Result<bool, OrthoError> {
    let polys: Vec<_> = (0..=n_max).map(|n| chahn_poly(p, n)).collect::<Result<_, _>>()?;
    for n in 0..n_max {
        let (a, b) = chahn_recurrence_coeffs(p, n)?;
        let mut rhs = (Poly::x() - Poly::constant(a)) * polys[n].clone();
        if n >= 1 {
            rhs = rhs - polys[n - 1].scale(&b);
        }
        if rhs != polys[n + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `p_n(a,b,c,d;x) = (−1)^n p_n(c,d,a,b;−x)` for `n ≤ n_max`.
pub fn chahn_symmetry_holds(p: &HahnParams, n_max: usize) -> Result<bool, OrthoError> {
    let q = p.swapped();
    for n in 0..=n_max {
        let lhs = chahn_poly(p, n)?;
        let mut rhs = chahn_poly(&q, n)?.reflect();
        if n % 2 == 1 {
            rhs = -rhs;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
