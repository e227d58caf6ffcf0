use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}
