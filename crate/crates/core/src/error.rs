//! Crate-wide error type.

/// Errors reported by the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate subspace: vectors are linearly dependent within tolerance")]
    DegenerateSubspace,

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("{name}: dimension {dim} outside supported range {min}..={max}")]
    DimensionOutOfRange {
        name: &'static str,
        dim: usize,
        min: usize,
        max: usize,
    },

    #[error("non-finite entry encountered")]
    NonFinite,

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    #[error("not unit-normalizable: edge lengths are not uniform (spread {spread:e})")]
    NonUniformEdges { spread: f64 },

    #[error("closure overflow: group exceeded max order {max_order}")]
    ClosureOverflow { max_order: usize },

    #[error("not a symmetry: the matrix does not map the vertex set onto itself")]
    NotASymmetry,

    #[error("unknown polytope '{0}'")]
    UnknownPolytope(String),

    #[error("'{0}' requires the `cell600` feature")]
    FeatureDisabled(&'static str),

    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
