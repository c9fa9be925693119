//! Upper-bounding approximations of the MSM distance.
//!
//! Each heuristic follows one concrete alignment, so its value is the cost of
//! a real transformation and never undercuts the exact distance. Besides the
//! value, every heuristic reports a [`SuffixPath`]: for each row `i` of the
//! longer series, the column its alignment visits and the cost it pays for the
//! suffix starting there. The pruned solver uses these to tighten its upper
//! bound while filling the table.

mod band;
mod greedy;
mod region;
mod triangle;

pub use band::{itakura, sakoe_chiba, BandSpec, ItakuraSpec};
pub use greedy::greedy_heuristic;
pub use triangle::triangle_heuristic;

use crate::{Distance, Scalar, TimeSeries};

/// Per-row completion costs along a heuristic's alignment.
///
/// Rows are those of the longer series. `column(i)` is the 1-based column the
/// alignment visits in row `i`; consecutive columns differ by 0 or 1, with
/// `column(1) == 1` and `column(m) == n`. `cost(i)` is the cost of a valid
/// transformation of `(x_i..x_m)` into `(y_column(i)..y_n)`, and
/// `cost(m + 1) == 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuffixPath<T> {
    costs: Vec<T>,
    columns: Vec<usize>,
}

impl<T: Scalar> SuffixPath<T> {
    pub(crate) fn new(costs: Vec<T>, columns: Vec<usize>) -> Self {
        debug_assert_eq!(costs.len(), columns.len() + 1);
        Self { costs, columns }
    }

    /// Number of rows `m`.
    pub fn rows(&self) -> usize {
        self.columns.len()
    }

    /// `R[i]` for `1 <= i <= m + 1`.
    #[inline]
    pub fn cost(&self, i: usize) -> T {
        self.costs[i - 1]
    }

    #[inline]
    pub fn column(&self, i: usize) -> usize {
        self.columns[i - 1]
    }

    pub fn costs(&self) -> &[T] {
        &self.costs
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }
}

/// Value of a heuristic plus its reverse-order path table.
#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicResult<T> {
    pub value: Distance<T>,
    pub suffix_path: Option<SuffixPath<T>>,
    /// True when the inputs were exchanged so that rows run over the longer
    /// series; `suffix_path` is then indexed by rows of `y`.
    pub swapped: bool,
}

/// Orders the pair so the first element is the longer series. Ties keep the
/// argument order.
pub(crate) fn orient<'a, T: Scalar>(
    x: &'a TimeSeries<T>,
    y: &'a TimeSeries<T>,
) -> (&'a [T], &'a [T], bool) {
    if x.len() >= y.len() {
        (x.as_slice(), y.as_slice(), false)
    } else {
        (y.as_slice(), x.as_slice(), true)
    }
}

/// The column `ceil(i * n / m)` the slope-`n/m` diagonal reaches in row `i`.
#[inline]
pub(crate) fn diagonal_column(i: usize, m: usize, n: usize) -> usize {
    ((i * n).div_ceil(m)).max(1)
}
