use thiserror::Error;

/// Errors raised by constructors, graph builders and solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "block {block} references point {point}, but the design has only {point_count} points"
    )]
    PointOutOfRange {
        block: usize,
        point: usize,
        point_count: usize,
    },
    #[error("block {block} lists point {point} more than once")]
    DuplicatePoint { block: usize, point: usize },
    #[error("strength must be at least 1")]
    ZeroStrength,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("prime required, got {0}")]
    NotPrime(u64),
    #[error("block size {block_size} exceeds point count {point_count}")]
    BlockTooLarge {
        block_size: usize,
        point_count: usize,
    },
    #[error("operation requires strength 2, design has strength {0}")]
    StrengthNotTwo(usize),
    #[error("invalid packing: {0}")]
    InvalidPacking(String),
    #[error("order is not a permutation of 0..{0}")]
    BadOrder(usize),
    #[error("graph has {vertices} vertices, exact solver budget is {budget}")]
    BudgetExceeded { vertices: usize, budget: usize },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
