use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error("bottom (-inf) has no multiplicative inverse")]
    InversionOfBottom,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// The Kleene star does not converge: the weighted digraph has a cycle of
    /// positive weight.
    #[error("Kleene star diverges (positive-weight cycle)")]
    Divergent,

    /// A pivot index is outside the required J-set; `index` is 1-based.
    #[error("index {index} is not in J{row}")]
    IndexNotInJ { row: u8, index: usize },

    #[error("system must have two rows of equal length n >= 1 (got {0})")]
    BadSystemShape(String),
}

pub type Result<T, E = TropError> = std::result::Result<T, E>;
