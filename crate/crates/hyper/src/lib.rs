//! Terminating hypergeometric series evaluated exactly, together with the
//! classical identities used to transform the near-center sums.
//!
//! Nonterminating `₂F₁` values only appear in [`float`], which is the one
//! place where floating point is used.

mod error;
pub mod float;
mod identities;
mod series;
mod wz;

pub use error::HyperError;
pub use identities::{chu_vandermonde_check, transform_checks, transform_sides, whipple_check, whipple_sides, Whipple};
pub use series::{pfq_terminating, HypSeries};
pub use wz::{
    wz_certificate, wz_certificate_check, wz_recurrence_rhs, wz_relation, wz_summand, wz_sum, summe_closed,
    summe_from_recurrence,
};
