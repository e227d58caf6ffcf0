//! Counting lozenge tilings of the hexagon with sides `N, M, N, N, M, N`
//! that contain a given rhombus on the symmetry axis parallel to the `M`
//! sides.
//!
//! Two independent routes are provided: a determinant of power sums valid
//! for every axis slot, and explicit single-sum formulas for the slots at
//! and next to the center. They are meant to be checked against each other.

mod asymptotics;
mod closed;
mod counts;
mod error;
mod propp;
mod sums;

pub use asymptotics::{arcsine_deviation, arcsine_prediction, near_center_proportion};
pub use closed::{closed_form, closed_form_detailed, ClosedFormValue, ClosedFormVariant, Route};
pub use counts::{
    count_dented_trapezoid, count_fixed_rhombus, count_subset_l, macmahon, DentedTrapezoid, HexagonQuery,
};
pub use error::TilingError;
pub use propp::{propp_closed_form, propp_proportion, propp_via_theorem, ProppVariant};
pub use sums::{pochhammer_sum, sum_identity_sides, verify_sum_identity, SumIdentity};
