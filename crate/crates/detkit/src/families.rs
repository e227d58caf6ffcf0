use std::collections::BTreeSet;

use lozenge_arith::{int, power_sum, power_sum_bernoulli_form, Rational};

use crate::det::{det_exact, Det};
use crate::error::DetError;
use crate::matrix::Matrix;

/// `k ↦ μ_k`.
pub trait MomentSequence<T>: Sync {
    fn moment(&self, k: usize) -> T;
}

impl<T, F: Fn(usize) -> T + Sync> MomentSequence<T> for F {
    fn moment(&self, k: usize) -> T {
        self(k)
    }
}

/// Rows and columns (1-based) removed to form a minor.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinorSpec {
    pub deleted_rows: BTreeSet<usize>,
    pub deleted_cols: BTreeSet<usize>,
}

impl MinorSpec {
    pub fn new(rows: &[usize], cols: &[usize]) -> Self {
        Self { deleted_rows: rows.iter().copied().collect(), deleted_cols: cols.iter().copied().collect() }
    }
}

/// `N×N` matrix with entries `Σ_{s=−a}^{b−1} s^{i+j}`.
pub fn build_power_sum_matrix(a: i64, b: i64, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |i, j| Rational::from_integer(power_sum(a, b, (i + j) as u32)))
}

/// `D(a, b, N)`; `D(a, b, 0) = 1`.
pub fn eval_d(a: i64, b: i64, n: usize) -> Rational {
    det_exact(&build_power_sum_matrix(a, b, n)).expect("square by construction")
}

/// `det_{0≤i,j≤n−1}(μ_{i+j+start})`.
pub fn hankel_matrix<T: Det>(mu: &impl MomentSequence<T>, n: usize, start: usize) -> Matrix<T> {
    let moments: Vec<T> = (0..2 * n).map(|k| mu.moment(k + start)).collect();
    Matrix::from_fn(n, n, |i, j| moments[i + j - 2].clone())
}

pub fn hankel_det<T: Det>(mu: &impl MomentSequence<T>, n: usize, start: usize) -> T {
    T::det(&hankel_matrix(mu, n, start)).expect("square by construction")
}

/// Determinant after deleting the rows and columns in `spec`.
///
/// Deleting an index that does not exist gives 0; deleting every row and
/// column of a matrix leaves the empty determinant 1.
pub fn minor_det<T: Det>(m: &Matrix<T>, spec: &MinorSpec) -> Result<T, DetError> {
    let in_range = spec.deleted_rows.iter().all(|&i| (1..=m.rows()).contains(&i))
        && spec.deleted_cols.iter().all(|&j| (1..=m.cols()).contains(&j));
    let rows = m.rows().saturating_sub(spec.deleted_rows.len());
    let cols = m.cols().saturating_sub(spec.deleted_cols.len());
    if rows != cols {
        return Err(DetError::NotSquare { rows, cols });
    }
    if !in_range {
        return Ok(T::zero());
    }
    let rows: Vec<usize> = (1..=m.rows()).filter(|i| !spec.deleted_rows.contains(i)).collect();
    let cols: Vec<usize> = (1..=m.cols()).filter(|j| !spec.deleted_cols.contains(j)).collect();
    T::det(&m.select(&rows, &cols))
}

/// `D(−n,−n,N) = (−1)^N D(n,n,N)` with entries from the Bernoulli form.
pub fn check_d_symmetry(n: i64, big_n: usize) -> bool {
    let entries = |x: &Rational| {
        Matrix::from_fn(big_n, big_n, |i, j| power_sum_bernoulli_form(x, (i + j) as u32))
    };
    let lhs = det_exact(&entries(&int(-n))).expect("square");
    let rhs = det_exact(&entries(&int(n))).expect("square");
    let sign = if big_n % 2 == 0 { int(1) } else { int(-1) };
    let anchored = n < 0 || rhs == eval_d(n, n, big_n);
    anchored && lhs == sign * rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use lozenge_arith::{bernoulli_number, rat, superfactorial, GaussianRational};

    #[test]
    fn power_sum_matrices() {
        assert_eq!(build_power_sum_matrix(1, 1, 1), Matrix::from_rows(vec![vec![int(1)]]));
        assert_eq!(build_power_sum_matrix(2, 2, 1), Matrix::from_rows(vec![vec![int(6)]]));
        let m3 = Matrix::from_rows(vec![
            vec![int(6), int(-8), int(18)],
            vec![int(-8), int(18), int(-32)],
            vec![int(18), int(-32), int(66)],
        ]);
        assert_eq!(build_power_sum_matrix(2, 2, 3), m3);
        assert_eq!(eval_d(2, 2, 0), int(1));
    }

    #[test]
    fn small_d_values() {
        assert_eq!(eval_d(1, 1, 1), int(1));
        assert_eq!(eval_d(2, 1, 2), int(4));
        assert_eq!(eval_d(3, 1, 3), int(144));
        let sq = |k: u64| Rational::from_integer(superfactorial(k).pow(2));
        assert_eq!(eval_d(3, 1, 3), sq(3));
    }

    #[test]
    fn hankel_examples() {
        let b = |k: usize| bernoulli_number(k);
        assert_eq!(hankel_det(&b, 2, 0), rat(-1, 12));
        assert_eq!(hankel_det(&b, 0, 5), int(1));
        // shifted start: det [[B_1, B_2], [B_2, B_3]] = −1/36
        assert_eq!(hankel_det(&b, 2, 1), rat(-1, 36));
        let g = |k: usize| GaussianRational::i_pow(k as i64);
        // det [[1, i], [i, −1]] = −1 + 1 = 0
        assert_eq!(hankel_det(&g, 2, 0), GaussianRational::real(int(0)));
    }

    #[test]
    fn minors() {
        let m = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(3), int(4)]]);
        assert_eq!(minor_det(&m, &MinorSpec::default()).unwrap(), int(-2));
        assert_eq!(minor_det(&m, &MinorSpec::new(&[1], &[2])).unwrap(), int(3));
        let one = Matrix::from_rows(vec![vec![int(7)]]);
        assert_eq!(minor_det(&one, &MinorSpec::new(&[1], &[1])).unwrap(), int(1));
        assert_eq!(minor_det(&one, &MinorSpec::new(&[1], &[2])).unwrap(), int(0));
        assert_eq!(minor_det(&one, &MinorSpec::new(&[1, 2], &[1, 2])).unwrap(), int(0));
        assert!(minor_det(&m, &MinorSpec::new(&[1], &[])).is_err());
    }

    #[test]
    fn symmetry() {
        assert!(check_d_symmetry(2, 3));
        assert!(check_d_symmetry(1, 1));
        assert!(check_d_symmetry(3, 4));
    }
}
