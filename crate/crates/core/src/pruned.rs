use std::time::Instant;

use crate::exact::row_buffer_distance;
use crate::heuristics::{
    greedy_heuristic, itakura, orient, sakoe_chiba, triangle_heuristic, BandSpec, HeuristicResult,
    ItakuraSpec, SuffixPath,
};
use crate::pruning::{limit, prune_rows};
use crate::{
    cmsm_suffix_table, split_merge_cost, CostParam, Distance, MsmError, PruneStats, Scalar,
    SuffixCostTable, TimeSeries,
};

/// Where the initial upper bound comes from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UpperBoundSource<T> {
    Greedy,
    Triangle { q: T },
    Sakoe(BandSpec),
    Itakura(ItakuraSpec),
    /// A caller-supplied bound. It must not be below the exact distance; if it
    /// is, the solver notices and falls back to the unpruned recursion.
    Explicit(T),
    /// No bound: nothing is pruned.
    Infinite,
}

/// Lower bound on the cost still needed from a cell to `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LowerBound<T> {
    None,
    /// Forced splits or merges, see [`lb_ms`].
    Ms,
    /// Reverse triangle inequality through `q`, see [`lb_t`].
    Triangle { q: T },
    /// Larger of the two; `lb_t` is only evaluated when `lb_ms` keeps the
    /// cell alive.
    MaxOfBoth { q: T },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PruneConfig<T> {
    pub ub_source: UpperBoundSource<T>,
    /// Tighten the bound along the heuristic's path as rows complete.
    pub ub_update: bool,
    /// Skip cells with `|i - j| > ceil(UB / c)`.
    pub pruning_band: bool,
    pub lb: LowerBound<T>,
}

impl<T: Scalar> PruneConfig<T> {
    pub fn new(ub_source: UpperBoundSource<T>) -> Self {
        Self {
            ub_source,
            ub_update: false,
            pruning_band: false,
            lb: LowerBound::None,
        }
    }

    /// Configuration that computes every cell.
    pub fn unpruned() -> Self {
        Self::new(UpperBoundSource::Infinite)
    }

    pub fn with_update(mut self, on: bool) -> Self {
        self.ub_update = on;
        self
    }

    pub fn with_band(mut self, on: bool) -> Self {
        self.pruning_band = on;
        self
    }

    pub fn with_lower_bound(mut self, lb: LowerBound<T>) -> Self {
        self.lb = lb;
        self
    }
}

impl<T: Scalar> Default for PruneConfig<T> {
    /// Greedy bound with updates, pruning band and `lb_ms`.
    fn default() -> Self {
        Self::new(UpperBoundSource::Greedy)
            .with_update(true)
            .with_band(true)
            .with_lower_bound(LowerBound::Ms)
    }
}

/// At least `|(m - i) - (n - j)|` splits or merges remain after cell `(i, j)`.
#[inline]
pub fn lb_ms<T: Scalar>(i: usize, j: usize, m: usize, n: usize, c: CostParam<T>) -> T {
    let gap = (m - i).abs_diff(n - j);
    T::from_usize(gap).expect("length fits scalar") * c.value()
}

/// Boundary correction for [`lb_t`].
///
/// With `a = |x_i - q| + |y_j - q|`, interior cells get `max(a - c, 0)`, the
/// corner `(m, n)` gets 0 and every other border cell gets `a`.
#[derive(Debug, Clone, Copy)]
pub struct STable<'a, T> {
    x: &'a [T],
    y: &'a [T],
    q: T,
    c: T,
}

impl<'a, T: Scalar> STable<'a, T> {
    pub fn new(x: &'a TimeSeries<T>, y: &'a TimeSeries<T>, q: T, c: CostParam<T>) -> Self {
        Self::from_slices(x.as_slice(), y.as_slice(), q, c.value())
    }

    pub(crate) fn from_slices(x: &'a [T], y: &'a [T], q: T, c: T) -> Self {
        Self { x, y, q, c }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        let (m, n) = (self.x.len(), self.y.len());
        let a = (self.x[i - 1] - self.q).abs() + (self.y[j - 1] - self.q).abs();
        if 1 < i && i < m && 1 < j && j < n {
            (a - self.c).max(T::zero())
        } else if i == m && j == n {
            T::zero()
        } else {
            a
        }
    }
}

/// Lower bound from the cMSM suffix tables of both series:
/// `max(0, |Dcx[i+1] - Dcy[j+1] - ((m-i) - (n-j)) c| - S[i, j])`.
#[allow(clippy::too_many_arguments)]
pub fn lb_t<T: Scalar>(
    i: usize,
    j: usize,
    dcx: &SuffixCostTable<T>,
    dcy: &SuffixCostTable<T>,
    x: &TimeSeries<T>,
    y: &TimeSeries<T>,
    q: T,
    c: CostParam<T>,
) -> T {
    let s = STable::new(x, y, q, c);
    lb_t_raw(i, j, dcx.with_sentinel(), dcy.with_sentinel(), &s, c.value())
}

#[inline]
fn lb_t_raw<T: Scalar>(i: usize, j: usize, dcx: &[T], dcy: &[T], s: &STable<'_, T>, c: T) -> T {
    let (m, n) = (dcx.len() - 1, dcy.len() - 1);
    let gap = (m - i) as f64 - (n - j) as f64;
    let est = (dcx[i] - dcy[j] - T::lit(gap) * c).abs();
    (est - s.get(i, j)).max(T::zero())
}

fn initial_bound<T: Scalar>(
    a: &TimeSeries<T>,
    b: &TimeSeries<T>,
    c: CostParam<T>,
    source: UpperBoundSource<T>,
) -> Result<(T, Option<SuffixPath<T>>), MsmError> {
    let from = |r: HeuristicResult<T>| {
        debug_assert!(!r.swapped);
        (r.value.value(), r.suffix_path)
    };
    Ok(match source {
        UpperBoundSource::Greedy => from(greedy_heuristic(a, b, c)),
        UpperBoundSource::Triangle { q } => from(triangle_heuristic(a, b, c, q)?),
        UpperBoundSource::Sakoe(band) => from(sakoe_chiba(a, b, c, band)?),
        UpperBoundSource::Itakura(spec) => from(itakura(a, b, c, spec)?),
        UpperBoundSource::Explicit(v) => (v, None),
        UpperBoundSource::Infinite => (T::infinity(), None),
    })
}

/// Exact MSM distance with pruning.
///
/// The result equals [`msm_classic`](crate::msm_classic) for every
/// configuration; the configuration only changes how many cells are
/// evaluated. Rows run over the longer series.
pub fn pruned_msm<T: Scalar>(
    x: &TimeSeries<T>,
    y: &TimeSeries<T>,
    c: CostParam<T>,
    cfg: PruneConfig<T>,
) -> Result<(Distance<T>, PruneStats<T>), MsmError> {
    let started = Instant::now();
    let (a, b, swapped) = orient(x, y);
    let (ta, tb) = if swapped { (y, x) } else { (x, y) };
    let (m, n) = (a.len(), b.len());
    let cv = c.value();

    let (ub_initial, path) = initial_bound(ta, tb, c, cfg.ub_source)?;
    let path = if cfg.ub_update { path } else { None };

    let triangle_q = match cfg.lb {
        LowerBound::Triangle { q } | LowerBound::MaxOfBoth { q } => Some(q),
        _ => None,
    };
    let tables = triangle_q.map(|q| (cmsm_suffix_table(ta, q, c), cmsm_suffix_table(tb, q, c)));
    let stable = triangle_q.map(|q| STable::from_slices(a, b, q, cv));
    let gap_cost = |i: usize, j: usize| T::from_usize((m - i).abs_diff(n - j)).expect("length fits scalar") * cv;
    let triangle = |i: usize, j: usize| {
        let (tx, ty) = tables.as_ref().expect("tables built for triangle bound");
        lb_t_raw(i, j, tx.with_sentinel(), ty.with_sentinel(), stable.as_ref().expect("s table"), cv)
    };

    let step = |i: usize, j: usize, diag: T, up: T, left: T| {
        let (ai, bj) = (a[i - 1], b[j - 1]);
        let a_prev = if i > 1 { a[i - 2] } else { ai };
        let b_prev = if j > 1 { b[j - 2] } else { bj };
        let mv = diag + (ai - bj).abs();
        let merge = up + split_merge_cost(ai, a_prev, bj, cv);
        let split = left + split_merge_cost(bj, ai, b_prev, cv);
        mv.min(merge).min(split)
    };
    let is_over = |i: usize, j: usize, v: T, lim: T| match cfg.lb {
        LowerBound::None => v > lim,
        LowerBound::Ms => v + gap_cost(i, j) > lim,
        LowerBound::Triangle { .. } => v + triangle(i, j) > lim,
        LowerBound::MaxOfBoth { .. } => v + gap_cost(i, j) > lim || v + triangle(i, j) > lim,
    };
    let update = |i: usize, row: &[T], lo: usize, hi: usize| {
        let path = path.as_ref()?;
        let p = path.column(i);
        if p < lo || p > hi || row[p] >= T::sentinel() || row[p].is_nan() {
            return None;
        }
        // Joining a prefix ending at column p to a suffix that starts at the
        // same column needs one extra merge.
        let join = if i < m && path.column(i + 1) == p { cv } else { T::zero() };
        Some(row[p] + path.cost(i + 1) + join)
    };
    let band_cost = cfg.pruning_band.then_some(cv);

    let outcome = prune_rows(m, n, ub_initial, band_cost, step, is_over, update);

    let mut stats = PruneStats {
        cells_computed: outcome.cells,
        cells_total: (m * n) as u64,
        ub_initial,
        ub_final: outcome.ub,
        elapsed: started.elapsed(),
    };
    let value = if outcome.value > limit(ub_initial, m, n) || !outcome.value.is_finite() {
        // Only reachable when an explicit bound undercuts the distance.
        stats.cells_computed = stats.cells_total;
        stats.ub_final = ub_initial;
        let v = row_buffer_distance(a, b, cv);
        stats.elapsed = started.elapsed();
        v
    } else {
        outcome.value
    };
    Ok((Distance::new(value), stats))
}
