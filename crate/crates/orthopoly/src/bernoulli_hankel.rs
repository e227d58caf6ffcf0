//! Hankel determinants whose entries are umbral Bernoulli expressions.

use lozenge_arith::{factorial, int, pochhammer, umbral_eval, LaurentPolynomial, Poly, Rational};
use lozenge_detkit::{hankel_det, minor_det, Matrix, MinorSpec};
use num_traits::{One, Zero};

use crate::error::OrthoError;
use crate::moments::{umbral_shifted, weight_polynomial};

fn fact(n: i64) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// The product formula, evaluated without any check on the parameters.
pub(crate) fn hankel_bernoulli_product(a: i64, b: i64, c: i64, d: i64, n: usize) -> Rational {
    let s = a + b + c + d;
    let base = fact(a + c - 1) * fact(b + c - 1) * fact(a + d - 1) * fact(b + d - 1) / fact(s - 1);
    let mut v = sign(n * n.saturating_sub(1) / 2) * num_traits::Pow::pow(&base, n as u32);
    for i in 1..n as i64 {
        let num = i * (a + c + i - 1) * (b + c + i - 1) * (a + d + i - 1) * (b + d + i - 1) * (s + i - 2);
        let den = (s + 2 * i - 3) * (s + 2 * i - 2) * (s + 2 * i - 2) * (s + 2 * i - 1);
        v *= num_traits::Pow::pow(&Rational::new(num.into(), den.into()), (n as i64 - i) as u32);
    }
    v
}

/// Closed form of `det_{1≤i,j≤n}(B^{i+j}(B+1)_{a−1}(B+1)_{b−1}(−B+1)_{c−1}(−B+1)_{d−1})`.
pub fn hankel_bernoulli_closed(a: i64, b: i64, c: i64, d: i64, n: usize) -> Result<Rational, OrthoError> {
    if a < 1 || b < 1 || c < 0 || d < 0 {
        return Err(OrthoError::ParameterOutOfRange {
            what: format!("need a, b ≥ 1 and c, d ≥ 0, got ({a}, {b}, {c}, {d})"),
        });
    }
    Ok(hankel_bernoulli_product(a, b, c, d, n))
}

/// The same determinant computed entry by entry.
pub fn hankel_bernoulli_direct(a: i64, b: i64, c: i64, d: i64, n: usize) -> Result<Rational, OrthoError> {
    if a < 0 || b < 0 || c < 0 || d < 0 {
        return Err(OrthoError::ParameterOutOfRange { what: format!("negative parameter in ({a}, {b}, {c}, {d})") });
    }
    // the weight already carries B², so row/column indices start at 0 here
    let w = weight_polynomial(a, b, c, d)? * LaurentPolynomial::monomial(int(1), -2);
    if n > 0 {
        umbral_shifted(&w, 2)?;
    }
    let entry = |k: usize| umbral_shifted(&w, k as i64).expect("exponents checked");
    Ok(hankel_det(&entry, n, 2))
}

/// `(−1)^{n(n−1)/2} 6^{−n}(1+2n+5n²+4n³+n⁴) Π_{i=1}^{n} (i(i+1)⁴(i+2)/((2i+1)(2i+2)²(2i+3)))^{n−i}`
pub fn extra_bernoulli_closed(n: usize) -> Rational {
    let ni = n as i64;
    let poly = 1 + 2 * ni + 5 * ni * ni + 4 * ni.pow(3) + ni.pow(4);
    let mut v = sign(n * n.saturating_sub(1) / 2) * int(poly) / num_traits::Pow::pow(&int(6), n as u32);
    for i in 1..=ni {
        let f = Rational::new(
            (i * (i + 1).pow(4) * (i + 2)).into(),
            ((2 * i + 1) * (2 * i + 2).pow(2) * (2 * i + 3)).into(),
        );
        v *= num_traits::Pow::pow(&f, (ni - i) as u32);
    }
    v
}

fn b_minus_one_squared() -> LaurentPolynomial {
    let t = LaurentPolynomial::b() - LaurentPolynomial::one();
    t.clone() * t
}

/// `det_{1≤i,j≤n}(B^{i+j−2}(B−1)²)`.
pub fn extra_bernoulli_direct(n: usize) -> Rational {
    let w = b_minus_one_squared();
    let entry = |k: usize| umbral_shifted(&w, k as i64).expect("polynomial weight");
    hankel_det(&entry, n, 0)
}

/// `λ_k`: the entries `B^k(B−1)²` with the corrections `−2` at `k = 0` and
/// `+1` at `k = 1`.
pub fn lambda(k: usize) -> Rational {
    let base = umbral_shifted(&b_minus_one_squared(), k as i64).expect("polynomial weight");
    match k {
        0 => base - int(2),
        1 => base + int(1),
        _ => base,
    }
}

/// `(λ_{i+j−2})_{1≤i,j≤n}`.
pub fn lambda_matrix(n: usize) -> Matrix<Rational> {
    let l: Vec<Rational> = (0..2 * n).map(lambda).collect();
    Matrix::from_fn(n, n, |i, j| l[i + j - 2].clone())
}

/// `Δ_n = Π_{i=1}^{n} (i−1)! i!⁴ (i+1)!/((2i)!(2i+1)!)` with sign `(−1)^{n(n−1)/2}`.
pub fn delta_closed(n: usize) -> Rational {
    let mut v = sign(n * n.saturating_sub(1) / 2);
    for i in 1..=n as i64 {
        v *= fact(i - 1) * num_traits::Pow::pow(&fact(i), 4u32) * fact(i + 1) / (fact(2 * i) * fact(2 * i + 1));
    }
    v
}

/// `Δ_n^{{1};{1}}`.
pub fn delta_11_closed(n: usize) -> Rational {
    let e = n.saturating_sub(1) * n.saturating_sub(2) / 2;
    let mut v = sign(e);
    for i in 1..n as i64 {
        v *= fact(i - 1) * num_traits::Pow::pow(&fact(i + 1), 4u32) * fact(i + 3) / (fact(2 * i + 2) * fact(2 * i + 3));
    }
    v
}

/// `Δ_n^{{1};{2}}`.
pub fn delta_12_closed(n: usize) -> Rational {
    let ni = n as i64;
    let mut v = sign(n * (n + 1) / 2) * num_traits::Pow::pow(&fact(ni), 2u32)
        / pochhammer(&int(ni + 3), n.saturating_sub(1) as u64);
    for i in 1..ni {
        v *= fact(i - 1) * num_traits::Pow::pow(&fact(i), 2u32) * num_traits::Pow::pow(&fact(i + 1), 2u32) * fact(i + 2)
            / (fact(2 * i + 1) * fact(2 * i + 2));
    }
    let sum: Rational = (1..ni)
        .map(|k| {
            pochhammer(&int(1 - ni), k as u64) * pochhammer(&int(ni + 3), k as u64)
                / (int(k) * num_traits::Pow::pow(&fact(k + 1), 2u32))
        })
        .sum();
    v * sum
}

/// `Σ_{k=0}^{n} (−n)_k (n+5)_k (1+x)_k / (k! (3)_k²)` as a polynomial in `x`.
pub fn c_polynomial(n: usize) -> Poly<Rational> {
    let ni = n as i64;
    let mut acc = Poly::zero();
    let mut rising = Poly::one();
    for k in 0..=n as u64 {
        let three = pochhammer(&int(3), k);
        let coeff = pochhammer(&int(-ni), k) * pochhammer(&int(ni + 5), k)
            / (Rational::from_integer(factorial(k)) * &three * &three);
        acc = acc + rising.scale(&coeff);
        rising = rising * Poly::new(vec![int(k as i64 + 1), int(1)]);
    }
    acc
}

/// `c_{0,n}` from Chu–Vandermonde: `4/((n+1)(n+4))` for even `n`,
/// `4/((n+2)(n+3))` for odd `n`.
pub fn c0_closed(n: usize) -> Rational {
    let ni = n as i64;
    if n % 2 == 0 {
        Rational::new(4.into(), ((ni + 1) * (ni + 4)).into())
    } else {
        Rational::new(4.into(), ((ni + 2) * (ni + 3)).into())
    }
}

/// `Δ_n^{{1,2};{1,2}}` for `n ≥ 2`; zero for `n = 1`, where row 2 does not exist.
pub fn delta_1212_closed(n: usize) -> Rational {
    if n < 2 {
        return Rational::zero();
    }
    let ni = n as i64;
    let p3 = |k: usize| pochhammer(&int(3), k as u64);
    let mut v = sign(n * (n - 1) / 2) * num_traits::Pow::pow(&p3(n - 2), 2u32) * num_traits::Pow::pow(&p3(n - 1), 2u32)
        / (pochhammer(&int(ni + 3), (n - 2) as u64) * pochhammer(&int(ni + 4), (n - 1) as u64));
    for i in 1..ni - 1 {
        v *= fact(i - 1) * num_traits::Pow::pow(&fact(i + 1), 4u32) * fact(i + 3) / (fact(2 * i + 2) * fact(2 * i + 3));
    }
    let lo = c_polynomial(n - 2);
    let hi = c_polynomial(n - 1);
    v * (lo.coeff(0) * hi.coeff(1) - hi.coeff(0) * lo.coeff(1))
}

/// Every quantity entering the four-minor expansion at one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraDecomposition {
    pub n: usize,
    pub direct: Rational,
    pub delta: Rational,
    pub delta_11: Rational,
    pub delta_12: Rational,
    pub delta_1212: Rational,
}

impl ExtraDecomposition {
    pub fn compute(n: usize) -> Self {
        let m = lambda_matrix(n);
        let minor = |r: &[usize], c: &[usize]| minor_det(&m, &MinorSpec::new(r, c)).expect("square minor");
        Self {
            n,
            direct: extra_bernoulli_direct(n),
            delta: minor(&[], &[]),
            delta_11: minor(&[1], &[1]),
            delta_12: minor(&[1], &[2]),
            delta_1212: minor(&[1, 2], &[1, 2]),
        }
    }

    /// `Δ − Δ^{{1,2};{1,2}} + 2Δ^{{1};{1}} + 2Δ^{{1};{2}}`
    pub fn expansion(&self) -> Rational {
        &self.delta - &self.delta_1212 + int(2) * &self.delta_11 + int(2) * &self.delta_12
    }

    /// Named pass/fail results for the expansion and each minor's closed form.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let n = self.n;
        let mut out = vec![
            ("expansion", self.direct == self.expansion()),
            ("delta", self.delta == delta_closed(n)),
            ("delta_1_1", self.delta_11 == delta_11_closed(n)),
            ("delta_1_2", self.delta_12 == delta_12_closed(n)),
            ("delta_12_12", self.delta_1212 == delta_1212_closed(n)),
        ];
        if n >= 1 {
            let diff_closed = {
                // 2Δ^{{1};{2}} − Δ^{{1,2};{1,2}} after the harmonic sums collapse
                let ni = n as i64;
                let s = if n % 2 == 0 { int(ni + 1) } else { int(-(ni + 1)) };
                sign(n * (n + 1) / 2) * (s + int(2)) * fact(ni + 2) / fact(ni - 1) * delta_closed(n)
                    * sign(n * (n - 1) / 2)
            };
            out.push(("difference", int(2) * &self.delta_12 - &self.delta_1212 == diff_closed));
        }
        out
    }
}

/// Whether the four-minor expansion and all minor closed forms hold at `n`.
pub fn verify_extra_decomposition(n: usize) -> bool {
    n >= 1 && ExtraDecomposition::compute(n).checks().iter().all(|(_, ok)| *ok)
}

/// Real umbral value of `B^k` times the weight, for callers that only need
/// the entries.
pub fn hankel_bernoulli_entry(a: i64, b: i64, c: i64, d: i64, k: i64) -> Result<Rational, OrthoError> {
    let w = weight_polynomial(a, b, c, d)?;
    Ok(umbral_eval(&(LaurentPolynomial::monomial(Rational::one(), k - 2) * w))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_arith::rat;

    #[test]
    fn anchors() {
        assert_eq!(hankel_bernoulli_closed(1, 1, 1, 1, 1).unwrap(), rat(1, 6));
        assert_eq!(hankel_bernoulli_closed(1, 1, 0, 0, 2).unwrap(), rat(-1, 12));
        assert_eq!(hankel_bernoulli_direct(1, 1, 0, 0, 2).unwrap(), rat(-1, 12));
        // B² (B+1)² / (−B)² = (B+1)², so B_2 + 2B_1 + B_0
        assert_eq!(hankel_bernoulli_direct(2, 2, 0, 0, 1).unwrap(), rat(1, 6));
        assert_eq!(hankel_bernoulli_closed(2, 2, 0, 0, 1).unwrap(), rat(1, 6));
        assert!(hankel_bernoulli_closed(0, 1, 1, 1, 2).is_err());
    }

    #[test]
    fn extra_small() {
        assert_eq!(extra_bernoulli_closed(1), rat(13, 6));
        assert_eq!(extra_bernoulli_direct(1), rat(13, 6));
        for n in 2..=4 {
            assert_eq!(extra_bernoulli_closed(n), extra_bernoulli_direct(n));
        }
    }

    #[test]
    fn lambda_corrections() {
        assert_eq!(lambda(0), rat(1, 6));
        // B(B−1)² = B_3 − 2B_2 + B_1 = −1/3 − 1/2; plus 1
        assert_eq!(lambda(1), rat(1, 6));
        assert_eq!(c0_closed(0), int(1));
    }

    #[test]
    fn decomposition_at_one() {
        let d = ExtraDecomposition::compute(1);
        assert_eq!(d.delta, rat(1, 6));
        assert_eq!(d.delta_11, int(1));
        assert!(d.delta_12.is_zero() && d.delta_1212.is_zero());
        assert!(verify_extra_decomposition(1));
    }
}
