//! Move-Split-Merge (MSM) distance for univariate time series.
//!
//! The crate provides the classic quadratic dynamic program, a single-row
//! variant, a linear-time solver for the distance to a constant series, four
//! upper-bounding heuristics, an exact pruned solver, and a DTW baseline with
//! the same pruning machinery.
//!
//! Every algorithm is generic over the [`Scalar`] type (`f32` or `f64`). The
//! aliases at the crate root fix the scalar to `f64`, which is what the
//! benchmark harness and CLI use.
//!
//! ```
//! use msm_core::{msm_improved, CostParam, Series};
//!
//! let x = Series::new(vec![4.0, 5.0, 5.0, 10.0]).unwrap();
//! let y = Series::new(vec![10.0, 7.0, 8.0]).unwrap();
//! let d = msm_improved(&x, &y, CostParam::new(0.1).unwrap());
//! assert!((d.value() - 8.3).abs() < 1e-9);
//! ```

mod cmsm;
mod cost;
mod dtw;
mod error;
mod exact;
pub mod heuristics;
mod pruned;
mod pruning;
mod scalar;
mod series;
mod stats;

pub use cmsm::{cmsm_distance, cmsm_suffix_table, SuffixCostTable};
pub use cost::{split_merge_cost, CostParam, Distance};
pub use dtw::{dtw_full, pruned_dtw, CostMode, DtwConfig, DtwUpperBound};
pub use error::MsmError;
pub use exact::{msm_classic, msm_improved, FullTable};
pub use heuristics::{
    greedy_heuristic, itakura, sakoe_chiba, triangle_heuristic, BandSpec, HeuristicResult,
    ItakuraSpec, SuffixPath,
};
pub use pruned::{lb_ms, lb_t, pruned_msm, LowerBound, PruneConfig, STable, UpperBoundSource};
pub use scalar::Scalar;
pub use series::{z_normalize, TimeSeries};
pub use stats::PruneStats;

/// A time series of `f64` values.
pub type Series = TimeSeries<f64>;
/// A time series of `f32` values.
pub type Series32 = TimeSeries<f32>;
/// Split/merge cost over `f64`.
pub type Cost = CostParam<f64>;
/// Pruning configuration over `f64`.
pub type Config = PruneConfig<f64>;
/// Pruning statistics over `f64`.
pub type Stats = PruneStats<f64>;
