//! Exhaustive lozenge-tiling enumeration, used as ground truth for the
//! determinant and closed-form counts.
//!
//! Tilings are perfect matchings between up- and down-triangles. The
//! search never uses linear algebra, so it shares no code with the
//! formulas it checks.

mod axis;
mod enumerate;
mod region;

use thiserror::Error;

pub use axis::{
    axis_profile, axis_profiles, count_dented_bruteforce, count_with_axis_rhombus, count_with_axis_subset,
    AxisProfile,
};
pub use enumerate::{count_tilings, enumerate_tilings, Enumerator, Lozenge, Tiling, Tilings, DEFAULT_BUDGET};
pub use lozenge_par::Mode;
pub use region::{build_dented_region, build_hexagon_region, Kind, TriRegion, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("more than {budget} tilings")]
    BudgetExceeded { budget: u64 },
    #[error("invalid dents {dents:?} for N={n}, M={m}")]
    InvalidDents { n: usize, m: usize, dents: Vec<usize> },
    #[error("axis slot {l} out of range for N={n}, M={m}")]
    SlotOutOfRange { n: usize, m: usize, l: usize },
}
