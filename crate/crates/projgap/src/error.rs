use crate::geometry::Point;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { got: usize, min: usize },

    #[error("axis {axis} out of range 1..={dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("duplicate point: {0}")]
    DuplicatePoint(Point),

    #[error("point has a negative coordinate: {0}")]
    NegativeCoordinate(Point),

    #[error("point has no zero coordinate (not in X_n): {0}")]
    NotInX(Point),

    #[error("point has a non-positive coordinate: {0}")]
    NotStrictlyPositive(Point),

    #[error("set is not a weak antichain: {0} strictly dominates {1}")]
    NotAWeakAntichain(Point, Point),

    #[error("set is not a down-set: missing predecessor {0}")]
    NotADownSet(Point),

    #[error("operation requires a nonempty point set")]
    EmptySet,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("no initial segment of size {size} exists in dimension {dim}")]
    SegmentExhausted { dim: usize, size: usize },

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
