use thiserror::Error;

/// Errors raised by shape construction, tiling, bumping and counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("zero part in the middle of {0:?}")]
    InteriorZero(Vec<u32>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    Containment { outer: String, inner: String },
    #[error("partitions have different sizes: {left} vs {right}")]
    SizeMismatch { left: u64, right: u64 },
    #[error("row index {index} out of range for a shape with {rows} rows")]
    RowIndexOutOfRange { index: usize, rows: usize },
    #[error("row indices must be strictly increasing: {0:?}")]
    RowIndicesNotIncreasing(Vec<usize>),
    #[error("operation requires a nonempty shape")]
    EmptyShape,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("cannot parse {0:?} as {1}")]
    Parse(String, &'static str),
    #[error("tableau is not semi-standard")]
    NotSemistandard,
    #[error("no ballot tiling: label {label} at row {row}, column {col} has no admissible predecessor")]
    NoTiling { label: u32, row: usize, col: usize },
    #[error("cell at row {row}, column {col} is not labeled")]
    UnlabeledCell { row: usize, col: usize },
    #[error("tiling is malformed: {0}")]
    MalformedTiling(String),
    #[error("bump repair did not terminate at label {label}")]
    BumpRepairLoop { label: u32 },
    #[error("row {row} is empty")]
    EmptyRow { row: usize },
    #[error("count overflow")]
    Overflow,
    #[error("filter configuration enables no bound family")]
    EmptyFilterConfig,
    #[error("survey failed: {0}")]
    Survey(String),
}

pub type Result<T> = std::result::Result<T, Error>;
