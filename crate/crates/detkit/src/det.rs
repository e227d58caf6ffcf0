use lozenge_arith::{is_integer, BigInt, GaussianRational, Rational, Scalar};
use num_traits::{One, Zero};

use crate::error::DetError;
use crate::matrix::Matrix;

/// Scalars with an exact determinant kernel.
pub trait Det: Scalar {
    fn det(m: &Matrix<Self>) -> Result<Self, DetError>;
}

impl Det for Rational {
    fn det(m: &Matrix<Self>) -> Result<Self, DetError> {
        det_exact(m)
    }
}

impl Det for GaussianRational {
    fn det(m: &Matrix<Self>) -> Result<Self, DetError> {
        det_gauss(m)
    }
}

fn check_square<T: Scalar>(m: &Matrix<T>) -> Result<(), DetError> {
    if m.is_square() {
        Ok(())
    } else {
        Err(DetError::NotSquare { rows: m.rows(), cols: m.cols() })
    }
}

/// Exact determinant of a rational matrix; `0×0` gives 1.
///
/// Integral matrices go through fraction-free Bareiss elimination, anything
/// else through Gaussian elimination over the rationals.
pub fn det_exact(m: &Matrix<Rational>) -> Result<Rational, DetError> {
    check_square(m)?;
    if (1..=m.rows()).all(|i| m.row(i).iter().all(is_integer)) {
        let ints: Vec<BigInt> = m.clone().into_data().into_iter().map(|r| r.numer().clone()).collect();
        Ok(Rational::from_integer(bareiss(m.rows(), ints)))
    } else {
        det_gauss(m)
    }
}

/// Bareiss elimination on an `n×n` row-major integer array.
pub fn bareiss(n: usize, mut a: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let v = (&pivot * &a[i * n + j] - &aik * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Gaussian elimination over any exact field; `0×0` gives 1.
pub fn det_gauss<T: Scalar>(m: &Matrix<T>) -> Result<T, DetError> {
    check_square(m)?;
    let n = m.rows();
    let mut a = m.clone().into_data();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            det = -det;
        }
        let pivot = a[k * n + k].clone();
        det = det * pivot.clone();
        let inv = T::one() / pivot;
        for i in k + 1..n {
            if a[i * n + k].is_zero() {
                continue;
            }
            let f = a[i * n + k].clone() * inv.clone();
            for j in k + 1..n {
                let v = a[i * n + j].clone() - f.clone() * a[k * n + j].clone();
                a[i * n + j] = v;
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_arith::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn examples() {
        assert_eq!(det_exact(&Matrix::identity(3)).unwrap(), int(1));
        assert_eq!(det_exact(&m(&[&[6, -8, 18], &[-8, 18, -32], &[18, -32, 66]])).unwrap(), int(144));
        assert_eq!(det_exact(&m(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]])).unwrap(), int(0));
        assert_eq!(det_exact(&Matrix::<Rational>::new(0, 0, vec![])).unwrap(), int(1));
    }

    #[test]
    fn pivoting_and_fractions() {
        assert_eq!(det_exact(&m(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
        assert_eq!(det_exact(&m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap(), int(-1));
        let f = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
        assert_eq!(det_exact(&f).unwrap(), rat(1, 10) - rat(1, 12));
    }

    #[test]
    fn not_square() {
        let r = det_exact(&Matrix::new(1, 2, vec![int(1), int(2)]));
        assert_eq!(r, Err(DetError::NotSquare { rows: 1, cols: 2 }));
    }

    #[test]
    fn gaussian_entries() {
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        // det [[1, i], [i, 1]] = 1 − i² = 2
        let g = Matrix::from_rows(vec![vec![one.clone(), i.clone()], vec![i, one]]);
        assert_eq!(GaussianRational::det(&g).unwrap(), GaussianRational::real(int(2)));
    }
}
