use lozenge_arith::ArithError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("axis index {l} out of range for N={n}, M={m}")]
    IndexOutOfRange { n: u64, m: u64, l: u64 },
    #[error("subset has {size} slots but N={n}")]
    SubsetTooSmall { n: u64, size: usize },
    #[error("invalid subset element {0}")]
    SubsetOutOfRange(u64),
    #[error("invalid dents {0:?}")]
    InvalidDents(Vec<u64>),
    #[error("{what} is outside its admissible range")]
    ParameterOutOfRange { what: String },
    #[error("singularity at {what} not resolved by first-order jets")]
    UnresolvedSingularity { what: String },
    #[error("expected an integer, got {0}")]
    NonIntegerResult(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
