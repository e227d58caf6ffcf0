use lozenge_arith::Rational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("series does not terminate: no upper parameter is a nonpositive integer")]
    NonTerminating,
    #[error("lower parameter {param} vanishes at index {index}, before termination")]
    ZeroDenominatorBeforeTermination { param: Rational, index: u64 },
    #[error("zero denominator: {what}")]
    ZeroDenominator { what: String },
}
