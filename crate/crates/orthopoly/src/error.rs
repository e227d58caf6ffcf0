use lozenge_arith::{ArithError, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthoError {
    #[error("Hankel determinant of order {n} vanishes")]
    SingularMomentMatrix { n: usize },
    #[error("zero denominator: {what}")]
    ZeroDenominator { what: String },
    #[error("parameter out of range: {what}")]
    ParameterOutOfRange { what: String },
    #[error("no closed form at x = {x}")]
    UnsupportedEvaluationPoint { x: Rational },
    #[error("three-term recurrence fails to reproduce p_{n}")]
    RecurrenceMismatch { n: usize },
    #[error("need b_1..b_{needed}, only {available} extracted")]
    DepthExceeded { needed: usize, available: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
}
