use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("negative exponent B^{exponent} survives umbral evaluation")]
    NegativeExponent { exponent: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("singularity not resolved at first order")]
    UnresolvedSingularity,
    #[error("shifted factorial ({base})_{k} has no Laurent representation")]
    UnsupportedShift { base: String, k: i64 },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
