//! Formal orthogonal polynomials and the Hankel determinants they evaluate.
//!
//! Moment sequences are umbral Bernoulli expressions; everything is exact,
//! over the rationals or the Gaussian rationals where `√−1` appears.
//!
//! Index origin differs between the two Hankel conventions in use:
//! `det_{0≤i,j≤n−1}(μ_{i+j})` for moments and `det_{1≤i,j≤n}` for the
//! Bernoulli entries. [`lozenge_detkit::hankel_det`] takes the start index
//! explicitly. With the `(B/√−1)^k` moments the two real forms differ by
//! `(−1)^{n(n−1)/2}`.

mod bernoulli_hankel;
mod bernoulli_poly_hankel;
mod chahn;
mod conjecture;
mod error;
mod favard;
mod leclerc;
mod moments;
mod weird;

pub use bernoulli_hankel::{
    c0_closed, c_polynomial, delta_11_closed, delta_1212_closed, delta_12_closed, delta_closed,
    extra_bernoulli_closed, extra_bernoulli_direct, hankel_bernoulli_closed, hankel_bernoulli_direct,
    hankel_bernoulli_entry, lambda, lambda_matrix, verify_extra_decomposition, ExtraDecomposition,
};
pub use bernoulli_poly_hankel::{bernoulli_poly_hankel, bernoulli_poly_hankel_closed};
pub use chahn::{
    chahn_a, chahn_b_displayed, chahn_poly, chahn_recurrence_coeffs, chahn_recurrence_holds, chahn_symmetry_holds,
};
pub use conjecture::{conjecture_explore, ConjectureFamily, ConjectureReport};
pub use error::OrthoError;
pub use favard::{hankel_via_jfraction, jfraction_from_moments, moment_determinant_poly, orth_poly_from_moments, JFraction};
pub use leclerc::{leclerc_check, leclerc_constant, leclerc_q, leclerc_sides};
pub use moments::{chahn_moments, weight_polynomial, ChahnMoments, HahnParams};
pub use weird::{
    doublesum_closed, lemma_weird_lhs, lemma_weird_rhs, simplesum_closed, weird_first_line, weird_second_line,
};
