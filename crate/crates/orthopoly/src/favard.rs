//! Orthogonal polynomials from moments, and the J-fraction coefficients of
//! their three-term recurrence.

use lozenge_arith::Poly;
use lozenge_detkit::{hankel_det, Det, Matrix, MomentSequence};

use crate::error::OrthoError;

/// The unnormalized determinant polynomial: the `(n+1)×(n+1)` Hankel block
/// of moments with `1, x, …, x^n` as last row.
pub fn moment_determinant_poly<T: Det>(mu: &impl MomentSequence<T>, n: usize) -> Poly<T> {
    if n == 0 {
        return Poly::one();
    }
    let moments: Vec<T> = (0..2 * n).map(|k| mu.moment(k)).collect();
    // expand along the last row
    let coeffs = (0..=n)
        .map(|j| {
            let cols: Vec<usize> = (0..=n).filter(|c| *c != j).collect();
            let minor = Matrix::from_fn(n, n, |r, c| moments[r - 1 + cols[c - 1]].clone());
            let v = T::det(&minor).expect("square");
            if (n + j) % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    Poly::new(coeffs)
}

/// Monic orthogonal polynomial of degree `n`.
pub fn orth_poly_from_moments<T: Det>(mu: &impl MomentSequence<T>, n: usize) -> Result<Poly<T>, OrthoError> {
    let d = hankel_det(mu, n, 0);
    if d.is_zero() {
        return Err(OrthoError::SingularMomentMatrix { n });
    }
    Ok(moment_determinant_poly(mu, n).scale(&(T::one() / d)))
}

/// `μ_0 / (1 + a_0 x − b_1 x² / (1 + a_1 x − b_2 x² / …))`, truncated.
///
/// `b[0]` stands for `b_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct JFraction<T> {
    pub mu0: T,
    pub a: Vec<T>,
    pub b: Vec<T>,
}

impl<T: Det> JFraction<T> {
    /// `b_n` for `n ≥ 1`.
    pub fn b_n(&self, n: usize) -> Option<&T> {
        n.checked_sub(1).and_then(|k| self.b.get(k))
    }

    /// Monic `p_0, …, p_n` generated by `p_{k+1} = (a_k + x) p_k − b_k p_{k−1}`.
    pub fn polynomials(&self, n: usize) -> Result<Vec<Poly<T>>, OrthoError> {
        let mut out = vec![Poly::one()];
        for k in 0..n {
            let a = self.a.get(k).ok_or(OrthoError::DepthExceeded { needed: k + 1, available: self.a.len() })?;
            let mut next = (Poly::x() + Poly::constant(a.clone())) * out[k].clone();
            if k >= 1 {
                let b = self.b_n(k).ok_or(OrthoError::DepthExceeded { needed: k, available: self.b.len() })?;
                next = next - out[k - 1].scale(b);
            }
            out.push(next);
        }
        Ok(out)
    }

    /// First `terms` power-series coefficients of the continued fraction.
    pub fn series(&self, terms: usize) -> Vec<T> {
        // tail_k = 1 + a_k x − b_{k+1} x² / tail_{k+1}, innermost tail = 1
        let mut tail = vec![T::one()];
        for k in (0..self.a.len()).rev() {
            let mut t = vec![T::one(), self.a[k].clone()];
            if let Some(b) = self.b_n(k + 1) {
                let q = series_inverse(&tail, terms);
                let shifted = std::iter::repeat(T::zero()).take(2).chain(q.into_iter().map(|c| c * b.clone()));
                t = add_series(&t, &shifted.take(terms).collect::<Vec<_>>(), true);
            }
            tail = t;
        }
        series_inverse(&tail, terms).into_iter().map(|c| c * self.mu0.clone()).collect()
    }
}

fn add_series<T: Det>(x: &[T], y: &[T], subtract: bool) -> Vec<T> {
    let n = x.len().max(y.len());
    (0..n)
        .map(|k| {
            let a = x.get(k).cloned().unwrap_or_else(T::zero);
            let b = y.get(k).cloned().unwrap_or_else(T::zero);
            if subtract {
                a - b
            } else {
                a + b
            }
        })
        .collect()
}

/// Inverse of a power series with constant term 1.
fn series_inverse<T: Det>(f: &[T], terms: usize) -> Vec<T> {
    let mut g: Vec<T> = Vec::with_capacity(terms);
    for k in 0..terms {
        if k == 0 {
            g.push(T::one() / f[0].clone());
            continue;
        }
        let mut s = T::zero();
        for j in 1..=k.min(f.len().saturating_sub(1)) {
            s = s + f[j].clone() * g[k - j].clone();
        }
        g.push(-s / f[0].clone());
    }
    g
}

/// Coefficients `a_0..a_{depth−1}` and `b_1..b_{depth−1}` read off the
/// orthogonal polynomials by coefficient comparison.
///
/// Each step is re-expanded: `p_{n+1} − (a_n + x) p_n + b_n p_{n−1}` must
/// vanish identically.
pub fn jfraction_from_moments<T: Det>(mu: &impl MomentSequence<T>, depth: usize) -> Result<JFraction<T>, OrthoError> {
    let polys: Vec<Poly<T>> = (0..=depth).map(|n| orth_poly_from_moments(mu, n)).collect::<Result<_, _>>()?;
    let mut a = Vec::with_capacity(depth);
    let mut b = Vec::with_capacity(depth.saturating_sub(1));
    for n in 0..depth {
        let r = polys[n + 1].clone() - Poly::x() * polys[n].clone();
        let an = r.coeff(n);
        let mut rest = r - polys[n].scale(&an);
        if n >= 1 {
            let bn = -rest.coeff(n - 1);
            if bn.is_zero() {
                return Err(OrthoError::SingularMomentMatrix { n: n + 1 });
            }
            rest = rest + polys[n - 1].scale(&bn);
            b.push(bn);
        }
        if !rest.is_zero() {
            return Err(OrthoError::RecurrenceMismatch { n: n + 1 });
        }
        a.push(an);
    }
    Ok(JFraction { mu0: mu.moment(0), a, b })
}

/// `μ_0^n Π_{k=1}^{n−1} b_k^{n−k}`.
pub fn hankel_via_jfraction<T: Det>(jf: &JFraction<T>, n: usize) -> Result<T, OrthoError> {
    if n == 0 {
        return Ok(T::one());
    }
    let mut acc = pow(&jf.mu0, n);
    for k in 1..n {
        let b = jf.b_n(k).ok_or(OrthoError::DepthExceeded { needed: n - 1, available: jf.b.len() })?;
        acc = acc * pow(b, n - k);
    }
    Ok(acc)
}

fn pow<T: Det>(x: &T, e: usize) -> T {
    (0..e).fold(T::one(), |acc, _| acc * x.clone())
}
