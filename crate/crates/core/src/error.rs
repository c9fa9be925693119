use thiserror::Error;

/// Errors raised by distance routines and their input constructors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MsmError {
    #[error("time series must contain at least one value")]
    EmptySeries,
    #[error("non-finite value {value} at position {index}")]
    NonFinite { index: usize, value: f64 },
    #[error("split/merge cost must be finite and nonnegative, got {0}")]
    InvalidCost(f64),
    #[error("band half-width {b} cannot reach cell ({m}, {n})")]
    InfeasibleBand { b: usize, m: usize, n: usize },
    #[error("itakura parameter must lie in (0, 1], got {0}")]
    InvalidItakura(f64),
    #[error("itakura region has no cells in row {row}")]
    InfeasibleRegion { row: usize },
}
