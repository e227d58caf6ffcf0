use std::fmt;

use lozenge_arith::{
    int, is_integer, shifted_factorial_in_b, umbral_eval, GaussianRational, LaurentPolynomial, Rational,
};
use lozenge_detkit::MomentSequence;
use num_traits::ToPrimitive;

use crate::error::OrthoError;

/// Parameters `(a, b, c, d)` of the continuous Hahn family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HahnParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl HahnParams {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(int(a), int(b), int(c), int(d))
    }

    /// `a + b + c + d`
    pub fn sum(&self) -> Rational {
        &self.a + &self.b + &self.c + &self.d
    }

    /// `(c, d, a, b)`, the partner in the reflection symmetry.
    pub fn swapped(&self) -> Self {
        Self::new(self.c.clone(), self.d.clone(), self.a.clone(), self.b.clone())
    }

    /// Integer parameters, each at least `0`.
    pub fn as_nonnegative_ints(&self) -> Option<[i64; 4]> {
        let f = |r: &Rational| is_integer(r).then(|| r.to_integer().to_i64()).flatten().filter(|v| *v >= 0);
        Some([f(&self.a)?, f(&self.b)?, f(&self.c)?, f(&self.d)?])
    }
}

impl fmt::Display for HahnParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// `B² (B+1)_{a−1} (B+1)_{b−1} (−B+1)_{c−1} (−B+1)_{d−1}` as a Laurent polynomial.
pub fn weight_polynomial(a: i64, b: i64, c: i64, d: i64) -> Result<LaurentPolynomial, OrthoError> {
    let mut p = LaurentPolynomial::b().pow(2);
    for (sign, k) in [(1, a - 1), (1, b - 1), (-1, c - 1), (-1, d - 1)] {
        p = p * shifted_factorial_in_b(sign, k)?;
    }
    Ok(p)
}

/// Umbral value of `B^k · q(B)`.
pub fn umbral_shifted(q: &LaurentPolynomial, k: i64) -> Result<Rational, OrthoError> {
    Ok(umbral_eval(&(LaurentPolynomial::monomial(int(1), k) * q.clone()))?)
}

/// `μ_k = (B/√−1)^k B² (B+1)_{a−1}(B+1)_{b−1}(−B+1)_{c−1}(−B+1)_{d−1}`.
pub fn chahn_moments(p: &HahnParams, k: usize) -> Result<GaussianRational, OrthoError> {
    let [a, b, c, d] = p.as_nonnegative_ints().ok_or_else(|| OrthoError::ParameterOutOfRange {
        what: format!("moments need nonnegative integer parameters, got {p}"),
    })?;
    let w = weight_polynomial(a, b, c, d)?;
    let real = umbral_shifted(&w, k as i64)?;
    Ok(GaussianRational::i_pow(-(k as i64)).scale(&real))
}

/// The moment functional of the continuous Hahn polynomials with integer
/// parameters, with the weight polynomial expanded once.
#[derive(Clone, Debug)]
pub struct ChahnMoments {
    weight: LaurentPolynomial,
}

impl ChahnMoments {
    pub fn new(p: &HahnParams) -> Result<Self, OrthoError> {
        let [a, b, c, d] = p.as_nonnegative_ints().ok_or_else(|| OrthoError::ParameterOutOfRange {
            what: format!("moments need nonnegative integer parameters, got {p}"),
        })?;
        let weight = weight_polynomial(a, b, c, d)?;
        umbral_eval(&weight)?;
        Ok(Self { weight })
    }

    /// Real part of the moment before the `√−1^{−k}` factor.
    pub fn real_moment(&self, k: usize) -> Rational {
        umbral_shifted(&self.weight, k as i64).expect("nonnegative exponents checked at construction")
    }
}

impl MomentSequence<GaussianRational> for ChahnMoments {
    fn moment(&self, k: usize) -> GaussianRational {
        GaussianRational::i_pow(-(k as i64)).scale(&self.real_moment(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_arith::rat;
    use num_traits::Zero;

    #[test]
    fn examples() {
        let p = HahnParams::ints(1, 1, 1, 1);
        assert_eq!(chahn_moments(&p, 0).unwrap(), GaussianRational::real(rat(1, 6)));
        assert!(chahn_moments(&p, 1).unwrap().is_zero());
        // B² · (1/(−B))² = 1
        assert_eq!(chahn_moments(&HahnParams::ints(1, 1, 0, 0), 0).unwrap(), GaussianRational::real(int(1)));
        // (B/i)² B² = −B_4
        assert_eq!(chahn_moments(&p, 2).unwrap(), GaussianRational::real(rat(1, 30)));
    }

    #[test]
    fn negative_exponent_propagates() {
        let p = HahnParams::ints(0, 0, 0, 1);
        assert!(matches!(chahn_moments(&p, 0), Err(OrthoError::Arith(_))));
        assert!(ChahnMoments::new(&p).is_err());
        assert!(ChahnMoments::new(&HahnParams::new(rat(1, 2), int(1), int(1), int(1))).is_err());
    }

    #[test]
    fn cached_sequence_agrees() {
        let p = HahnParams::ints(2, 2, 0, 1);
        let mu = ChahnMoments::new(&p).unwrap();
        for k in 0..8 {
            assert_eq!(mu.moment(k), chahn_moments(&p, k).unwrap());
        }
    }
}
