//! Exact numeric tower used throughout the workspace.
//!
//! Everything here is exact: rationals are `num_rational::BigRational`,
//! Gaussian rationals are pairs of those, and the jet/germ types carry
//! first-order information about removable singularities.

mod bernoulli;
mod error;
mod gaussian;
mod germ;
mod jet;
mod laurent;
mod poly;
mod rational;
mod scalar;

pub use bernoulli::{bernoulli_number, bernoulli_poly};
pub use error::ArithError;
pub use gaussian::GaussianRational;
pub use germ::Germ;
pub use jet::JetRational;
pub use laurent::{shifted_factorial_in_b, umbral_eval, LaurentPolynomial};
pub use poly::Poly;
pub use rational::{
    binomial, factorial, fmt_rational, harmonic, int, is_integer, parse_rational, pochhammer,
    power_sum, power_sum_bernoulli_form, rat, superfactorial, to_integer, Rational,
};
pub use scalar::Scalar;

pub use num_bigint::BigInt;
