use super::{orient, HeuristicResult, SuffixPath};
use crate::{CostParam, Distance, Scalar, TimeSeries};

/// Linear-time upper bound following a shifted diagonal.
///
/// With `m >= n`, point `x_k` is paired with `y_(k - (m - n))` for the last
/// `n` points and every earlier point is folded into `y_1`. The table `G` is
/// filled from the back; `G[k]` prices the suffix from row `k`.
///
/// On the diagonal, two consecutive pairs that are each at least `2c` apart
/// share one move: the `x` pair is merged, the `y` pair is split, costing
/// `2c` plus both gaps. In the overhang, a point at least `c` from `y_1`
/// next to another such point is merged into its neighbour instead of moved.
pub fn greedy_heuristic<T: Scalar>(x: &TimeSeries<T>, y: &TimeSeries<T>, c: CostParam<T>) -> HeuristicResult<T> {
    let (a, b, swapped) = orient(x, y);
    let (m, n) = (a.len(), b.len());
    let shift = m - n;
    let c = c.value();
    let two_c = c + c;

    let mut g = vec![T::zero(); m + 1];
    g[m - 1] = (a[m - 1] - b[n - 1]).abs();
    // 0-based: row k pairs with column k - shift.
    for k in (shift..m - 1).rev() {
        let j = k - shift;
        let here = (a[k] - b[j]).abs();
        let next = (a[k + 1] - b[j + 1]).abs();
        g[k] = if here >= two_c && next >= two_c {
            g[k + 1] + two_c + (a[k] - a[k + 1]).abs() + (b[j] - b[j + 1]).abs()
        } else {
            g[k + 1] + here
        };
    }
    let first = b[0];
    for k in (0..shift).rev() {
        g[k] = if (a[k] - first).abs() >= c && (a[k + 1] - first).abs() >= c {
            g[k + 1] + c + (a[k] - a[k + 1]).abs()
        } else {
            g[k + 1] + c + (a[k] - first).abs()
        };
    }

    let columns = (1..=m).map(|i| i.saturating_sub(shift).max(1)).collect();
    HeuristicResult {
        value: Distance::new(g[0]),
        suffix_path: Some(SuffixPath::new(g, columns)),
        swapped,
    }
}
