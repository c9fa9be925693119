use std::time::Instant;

use crate::heuristics::{diagonal_column, orient};
use crate::pruning::{limit, prune_rows};
use crate::{Distance, PruneStats, Scalar, TimeSeries};

/// Pointwise cost used by DTW.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CostMode {
    #[default]
    Squared,
    Absolute,
}

impl CostMode {
    #[inline]
    fn cost<T: Scalar>(self, a: T, b: T) -> T {
        match self {
            CostMode::Squared => (a - b) * (a - b),
            CostMode::Absolute => (a - b).abs(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DtwUpperBound<T> {
    /// Cost of the (slanted) diagonal alignment.
    EuclideanPath,
    /// Must not be below the DTW value.
    Explicit(T),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DtwConfig<T> {
    pub cost_mode: CostMode,
    pub ub_source: DtwUpperBound<T>,
}

impl<T> Default for DtwConfig<T> {
    fn default() -> Self {
        Self {
            cost_mode: CostMode::Squared,
            ub_source: DtwUpperBound::EuclideanPath,
        }
    }
}

impl<T> DtwConfig<T> {
    pub fn new(cost_mode: CostMode, ub_source: DtwUpperBound<T>) -> Self {
        Self { cost_mode, ub_source }
    }
}

/// Unconstrained DTW with a full two-row recursion. `cfg.ub_source` is ignored.
pub fn dtw_full<T: Scalar>(x: &TimeSeries<T>, y: &TimeSeries<T>, cfg: DtwConfig<T>) -> Distance<T> {
    let (xs, ys) = (x.as_slice(), y.as_slice());
    let n = ys.len();
    let mut prev = vec![T::sentinel(); n + 1];
    let mut cur = vec![T::sentinel(); n + 1];
    prev[0] = T::zero();
    for &a in xs {
        cur[0] = T::sentinel();
        for j in 1..=n {
            let best = prev[j - 1].min(prev[j]).min(cur[j - 1]);
            cur[j] = best + cfg.cost_mode.cost(a, ys[j - 1]);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Distance::new(prev[n])
}

/// Cost of the alignment that visits column `ceil(i n / m)` in row `i`.
fn diagonal_path_cost<T: Scalar>(a: &[T], b: &[T], mode: CostMode) -> T {
    let (m, n) = (a.len(), b.len());
    (1..=m).fold(T::zero(), |acc, i| acc + mode.cost(a[i - 1], b[diagonal_column(i, m, n) - 1]))
}

/// DTW with the same row-window pruning as the pruned MSM solver and no
/// lower bound.
pub fn pruned_dtw<T: Scalar>(
    x: &TimeSeries<T>,
    y: &TimeSeries<T>,
    cfg: DtwConfig<T>,
) -> (Distance<T>, PruneStats<T>) {
    let started = Instant::now();
    let (a, b, _) = orient(x, y);
    let (m, n) = (a.len(), b.len());
    let mode = cfg.cost_mode;
    let ub_initial = match cfg.ub_source {
        DtwUpperBound::EuclideanPath => diagonal_path_cost(a, b, mode),
        DtwUpperBound::Explicit(v) => v,
        DtwUpperBound::Infinite => T::infinity(),
    };

    let outcome = prune_rows(
        m,
        n,
        ub_initial,
        None,
        |i, j, diag, up, left| diag.min(up).min(left) + mode.cost(a[i - 1], b[j - 1]),
        |_, _, v, lim| v > lim,
        |_, _, _, _| None,
    );

    let mut stats = PruneStats {
        cells_computed: outcome.cells,
        cells_total: (m * n) as u64,
        ub_initial,
        ub_final: outcome.ub,
        elapsed: started.elapsed(),
    };
    let value = if outcome.value > limit(ub_initial, m, n) || !outcome.value.is_finite() {
        stats.cells_computed = stats.cells_total;
        let v = dtw_full(x, y, cfg).value();
        stats.elapsed = started.elapsed();
        v
    } else {
        outcome.value
    };
    (Distance::new(value), stats)
}
