//! Row-window pruning shared by the pruned MSM and DTW solvers.
//!
//! Rows are filled left to right inside a window `[sc, ..]`. A cell is *over*
//! when its value plus a lower bound on the remaining cost exceeds the current
//! upper bound. The next row starts after the leading run of over cells, and a
//! row stops at the first over cell at or past `ec`, the column after the last
//! live cell of the row above. Cells outside the window read as the sentinel.

use crate::Scalar;

pub(crate) struct Outcome<T> {
    /// `D[m][n]`, or the sentinel when pruning cut every path.
    pub value: T,
    pub cells: u64,
    pub ub: T,
}

/// Tolerance added to the upper bound before the over test. The bound and
/// the table sum the same costs in different orders, so an exact bound may
/// sit a few ulps below `D[m][n]`.
pub(crate) fn limit<T: Scalar>(ub: T, m: usize, n: usize) -> T {
    let ulps = T::from_usize(4 * (m + n)).expect("length fits scalar");
    ub + (ub.abs() + T::one()) * T::epsilon() * ulps
}

/// Runs the pruned recursion over an `m x n` table.
///
/// * `step(i, j, diag, up, left)` gives `D[i][j]` from its three neighbours.
/// * `is_over(i, j, value, limit)` decides whether the cell is over.
/// * `update(i, row, lo, hi)` may offer a new upper bound after row `i`;
///   `row[lo..=hi]` holds the freshly computed cells.
/// * `band_cost`, when set, restricts row `i` to `|i - j| <= ceil(ub / c)`.
pub(crate) fn prune_rows<T, S, O, U>(
    m: usize,
    n: usize,
    ub: T,
    band_cost: Option<T>,
    mut step: S,
    mut is_over: O,
    mut update: U,
) -> Outcome<T>
where
    T: Scalar,
    S: FnMut(usize, usize, T, T, T) -> T,
    O: FnMut(usize, usize, T, T) -> bool,
    U: FnMut(usize, &[T], usize, usize) -> Option<T>,
{
    let mut ub = ub;
    let mut prev = vec![T::sentinel(); n + 1];
    let mut cur = vec![T::sentinel(); n + 1];
    prev[0] = T::zero();
    let mut prev_range = (0usize, 0usize);
    let mut sc = 1usize;
    let mut ec = n + 1;
    let mut cells = 0u64;

    for i in 1..=m {
        let lim = limit(ub, m, n);
        let (mut lo, mut hi) = (sc, n);
        if let Some(c) = band_cost {
            if c > T::zero() && lim.is_finite() {
                let width = (lim / c).ceil().to_usize().unwrap_or(usize::MAX);
                lo = lo.max(i.saturating_sub(width));
                hi = hi.min(i.saturating_add(width));
            }
        }
        if lo > hi {
            return Outcome { value: T::sentinel(), cells, ub };
        }

        let read = |buf: &[T], j: usize| {
            if prev_range.0 <= j && j <= prev_range.1 {
                buf[j]
            } else {
                T::sentinel()
            }
        };
        let mut first_live = None;
        let mut last_live = None;
        let mut computed_hi = lo - 1;
        for j in lo..=hi {
            let diag = read(&prev, j - 1);
            let up = read(&prev, j);
            let left = if j > lo { cur[j - 1] } else { T::sentinel() };
            let v = step(i, j, diag, up, left);
            cur[j] = v;
            cells += 1;
            computed_hi = j;
            if is_over(i, j, v, lim) {
                if j >= ec {
                    break;
                }
            } else {
                first_live.get_or_insert(j);
                last_live = Some(j);
            }
        }

        let (Some(first), Some(last)) = (first_live, last_live) else {
            return Outcome { value: T::sentinel(), cells, ub };
        };
        sc = first;
        ec = last + 1;
        if let Some(candidate) = update(i, &cur, lo, computed_hi) {
            if candidate < ub {
                ub = candidate;
            }
        }
        std::mem::swap(&mut prev, &mut cur);
        prev_range = (lo, computed_hi);
    }

    let value = if prev_range.0 <= n && n <= prev_range.1 {
        prev[n]
    } else {
        T::sentinel()
    };
    Outcome { value, cells, ub }
}
