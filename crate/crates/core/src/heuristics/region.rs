//! Dynamic programming restricted to a per-row column range.

use crate::{split_merge_cost, MsmError, Scalar};

/// Inclusive 1-based column range for every row.
#[derive(Debug, Clone)]
pub(crate) struct Region {
    ranges: Vec<(usize, usize)>,
}

impl Region {
    pub(crate) fn new(ranges: Vec<(usize, usize)>) -> Result<Self, MsmError> {
        if let Some(row) = ranges.iter().position(|&(lo, hi)| lo > hi) {
            return Err(MsmError::InfeasibleRegion { row: row + 1 });
        }
        Ok(Self { ranges })
    }

    #[inline]
    pub(crate) fn range(&self, i: usize) -> (usize, usize) {
        self.ranges[i - 1]
    }

    #[inline]
    fn contains(&self, i: usize, j: usize) -> bool {
        let (lo, hi) = self.range(i);
        lo <= j && j <= hi
    }

    #[cfg(test)]
    pub(crate) fn cell_count(&self) -> usize {
        self.ranges.iter().map(|&(lo, hi)| hi + 1 - lo).sum()
    }
}

/// Forward MSM recursion over the cells of `region`; cells outside it act as
/// the sentinel. Returns `D[m][n]`.
pub(crate) fn forward<T: Scalar>(a: &[T], b: &[T], c: T, region: &Region) -> T {
    let (m, n) = (a.len(), b.len());
    let mut prev = vec![T::sentinel(); n + 1];
    let mut cur = vec![T::sentinel(); n + 1];
    // Row 0 only holds D[0][0].
    let mut prev_range = (0, 0);
    prev[0] = T::zero();

    for i in 1..=m {
        let (lo, hi) = region.range(i);
        let ai = a[i - 1];
        let a_prev = if i > 1 { a[i - 2] } else { ai };
        let read_prev = |buf: &[T], j: usize| {
            if prev_range.0 <= j && j <= prev_range.1 {
                buf[j]
            } else {
                T::sentinel()
            }
        };
        for j in lo..=hi {
            let bj = b[j - 1];
            let b_prev = if j > 1 { b[j - 2] } else { bj };
            let diag = read_prev(&prev, j - 1);
            let up = read_prev(&prev, j);
            let left = if j > lo { cur[j - 1] } else { T::sentinel() };
            let mv = diag + (ai - bj).abs();
            let merge = up + split_merge_cost(ai, a_prev, bj, c);
            let split = left + split_merge_cost(bj, ai, b_prev, c);
            cur[j] = mv.min(merge).min(split);
        }
        std::mem::swap(&mut prev, &mut cur);
        prev_range = (lo, hi);
    }

    if region.contains(m, n) {
        prev[n]
    } else {
        T::sentinel()
    }
}

/// Backward pass: `B[i][j]` is the cheapest in-region continuation from cell
/// `(i, j)` to `(m, n)` using the same step costs as the forward recursion.
/// Returns `R[i] = |a_i - b_p(i)| + B[i][p(i)]` for the given path columns,
/// followed by the trailing zero.
pub(crate) fn suffix_costs<T: Scalar>(
    a: &[T],
    b: &[T],
    c: T,
    region: &Region,
    columns: &[usize],
) -> Vec<T> {
    let (m, n) = (a.len(), b.len());
    let mut next = vec![T::sentinel(); n + 2];
    let mut cur = vec![T::sentinel(); n + 2];
    let mut next_range = (1, 0);
    let mut costs = vec![T::zero(); m + 1];

    for i in (1..=m).rev() {
        let (lo, hi) = region.range(i);
        let ai = a[i - 1];
        let in_next = |j: usize| next_range.0 <= j && j <= next_range.1;
        for j in (lo..=hi).rev() {
            let bj = b[j - 1];
            let mut best = if i == m && j == n { T::zero() } else { T::sentinel() };
            if i < m {
                let a_next = a[i];
                if j < n && in_next(j + 1) {
                    best = best.min(next[j + 1] + (a_next - b[j]).abs());
                }
                if in_next(j) {
                    best = best.min(next[j] + split_merge_cost(a_next, ai, bj, c));
                }
            }
            if j < hi {
                best = best.min(cur[j + 1] + split_merge_cost(b[j], ai, bj, c));
            }
            cur[j] = best;
        }
        let p = columns[i - 1];
        debug_assert!(lo <= p && p <= hi, "path column outside region");
        costs[i - 1] = (ai - b[p - 1]).abs() + cur[p];
        std::mem::swap(&mut next, &mut cur);
        next_range = (lo, hi);
    }
    costs
}
