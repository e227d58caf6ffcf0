use lozenge_arith::{superfactorial, to_integer, BigInt, Rational};
use lozenge_detkit::{det_exact, eval_d, Matrix};
use num_traits::{One, Zero};

use crate::error::TilingError;

/// Hexagon with sides `N, M, N, N, M, N` and axis slot `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HexagonQuery {
    pub n: u64,
    pub m: u64,
    pub l: u64,
}

impl HexagonQuery {
    pub fn new(n: u64, m: u64, l: u64) -> Result<Self, TilingError> {
        if n == 0 || m == 0 || l >= n + m {
            return Err(TilingError::IndexOutOfRange { n, m, l });
        }
        Ok(Self { n, m, l })
    }

    pub fn reflected(&self) -> Self {
        Self { l: self.n + self.m - 1 - self.l, ..*self }
    }
}

pub(crate) fn integral(r: Rational) -> Result<BigInt, TilingError> {
    to_integer(&r).ok_or_else(|| TilingError::NonIntegerResult(r.to_string()))
}

/// Plane partitions in an `a×b×c` box: `Π_{i≤a, j≤b} (i+j+c−1)/(i+j−1)`.
pub fn macmahon(a: u64, b: u64, c: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=a {
        for j in 1..=b {
            num *= i + j + c - 1;
            den *= i + j - 1;
        }
    }
    integral(Rational::new(num, den)).expect("box count is an integer")
}

fn inv_superfactorial_sq(k: u64) -> Rational {
    let s = superfactorial(k);
    Rational::new(BigInt::one(), &s * &s)
}

/// Tilings containing the axis rhombus at slot `l`, via the power-sum determinant.
pub fn count_fixed_rhombus(q: HexagonQuery) -> Result<BigInt, TilingError> {
    let HexagonQuery { n, m, l } = HexagonQuery::new(q.n, q.m, q.l)?;
    let d = eval_d(l as i64, (n + m - l) as i64, (n - 1) as usize);
    integral(d * inv_superfactorial_sq(n - 1))
}

/// Semi-hexagon with `N` dents at positions `r_0 < … < r_{N−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DentedTrapezoid {
    pub n: u64,
    pub m: u64,
    pub dents: Vec<u64>,
}

impl DentedTrapezoid {
    pub fn new(n: u64, m: u64, dents: Vec<u64>) -> Result<Self, TilingError> {
        let ok = dents.len() as u64 == n && dents.windows(2).all(|w| w[0] < w[1]) && dents.iter().all(|&r| r < n + m);
        if !ok {
            return Err(TilingError::InvalidDents(dents));
        }
        Ok(Self { n, m, dents })
    }
}

/// `Π_{i<j} (r_j − r_i) / Π_{i=1}^{N−1} i!`.
pub fn count_dented_trapezoid(t: &DentedTrapezoid) -> Result<BigInt, TilingError> {
    let t = DentedTrapezoid::new(t.n, t.m, t.dents.clone())?;
    let mut p = BigInt::one();
    for (i, ri) in t.dents.iter().enumerate() {
        for rj in &t.dents[i + 1..] {
            p *= rj - ri;
        }
    }
    integral(Rational::new(p, superfactorial(t.n.saturating_sub(1))))
}

/// Tilings whose axis rhombi all lie in `slots`.
pub fn count_subset_l(n: u64, m: u64, slots: &[u64]) -> Result<BigInt, TilingError> {
    if let Some(&bad) = slots.iter().find(|&&s| s >= n + m) {
        return Err(TilingError::SubsetOutOfRange(bad));
    }
    let mut l: Vec<u64> = slots.to_vec();
    l.sort_unstable();
    l.dedup();
    if (l.len() as u64) < n {
        return Err(TilingError::SubsetTooSmall { n, size: l.len() });
    }
    let size = n as usize;
    let moments: Vec<BigInt> = (0..2 * size)
        .map(|k| l.iter().fold(BigInt::zero(), |acc, &s| acc + num_traits::pow(BigInt::from(s), k)))
        .collect();
    let h = Matrix::from_fn(size, size, |i, j| Rational::from_integer(moments[i + j - 2].clone()));
    let d = det_exact(&h).expect("square");
    integral(d * inv_superfactorial_sq(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, m: u64, l: u64) -> HexagonQuery {
        HexagonQuery { n, m, l }
    }

    #[test]
    fn macmahon_examples() {
        assert_eq!(macmahon(1, 1, 1), BigInt::from(2));
        assert_eq!(macmahon(2, 2, 2), BigInt::from(20));
        assert_eq!(macmahon(3, 4, 0), BigInt::one());
        assert_eq!(macmahon(3, 2, 3), BigInt::from(175));
    }

    #[test]
    fn fixed_rhombus_examples() {
        assert_eq!(count_fixed_rhombus(q(1, 1, 1)).unwrap(), BigInt::one());
        assert_eq!(count_fixed_rhombus(q(2, 2, 2)).unwrap(), BigInt::from(6));
        assert_eq!(count_fixed_rhombus(q(2, 2, 0)).unwrap(), BigInt::from(14));
        assert!(count_fixed_rhombus(q(2, 2, 4)).is_err());
    }

    #[test]
    fn dented_examples() {
        let t = DentedTrapezoid::new(4, 3, vec![0, 1, 4, 5]).unwrap();
        assert_eq!(count_dented_trapezoid(&t).unwrap(), BigInt::from(20));
        let t = DentedTrapezoid::new(3, 2, vec![0, 1, 2]).unwrap();
        assert_eq!(count_dented_trapezoid(&t).unwrap(), BigInt::one());
        let t = DentedTrapezoid::new(1, 5, vec![3]).unwrap();
        assert_eq!(count_dented_trapezoid(&t).unwrap(), BigInt::one());
        assert!(DentedTrapezoid::new(2, 1, vec![2, 0]).is_err());
    }

    #[test]
    fn subset_examples() {
        assert_eq!(count_subset_l(1, 1, &[0, 1]).unwrap(), BigInt::from(2));
        assert_eq!(count_subset_l(3, 2, &[0, 1, 2, 3, 4]).unwrap(), macmahon(3, 2, 3));
        let full = macmahon(2, 2, 2);
        assert_eq!(count_subset_l(2, 2, &[0, 1, 3]).unwrap(), full - count_fixed_rhombus(q(2, 2, 2)).unwrap());
        assert!(count_subset_l(3, 2, &[0, 1]).is_err());
    }
}
