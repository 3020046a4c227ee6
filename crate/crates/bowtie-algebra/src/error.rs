use thiserror::Error;

/// Errors produced by matched-pair algebra operations.
#[derive(Debug, Error)]
pub enum AlgebraError {
    /// An input vector does not match the dimension declared by the
    /// structure (or by the map being transposed).
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// Zero-dimensional algebras are rejected at construction.
    #[error("algebra dimensions must be positive (got dim_g = {dim_g}, dim_h = {dim_h})")]
    InvalidDimension { dim_g: usize, dim_h: usize },

    /// A structure document failed validation on import.
    #[error("structure document: {0}")]
    Document(String),

    /// JSON (de)serialization failure.
    #[error(transparent)]
    Json(#[from] serde_json::Error),

    /// Filesystem failure while reading or writing a document.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
