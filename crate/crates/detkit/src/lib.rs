//! Exact determinants and the structured matrices built from power sums
//! and moment sequences.

mod det;
mod error;
mod families;
mod matrix;

pub use det::{bareiss, det_exact, det_gauss, Det};
pub use error::DetError;
pub use families::{
    build_power_sum_matrix, check_d_symmetry, eval_d, hankel_det, hankel_matrix, minor_det, MinorSpec,
    MomentSequence,
};
pub use matrix::Matrix;

pub type RationalMatrix = Matrix<lozenge_arith::Rational>;
