use crate::{CostParam, Distance, Scalar, TimeSeries};

/// Reverse-order costs of transforming each suffix of `x` into a constant
/// series of the same length.
///
/// Indexing is 1-based: `get(i)` is the cost for `(x_i..x_m)`, valid for
/// `1 <= i <= m + 1`, with `get(m + 1) == 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuffixCostTable<T> {
    entries: Vec<T>,
}

impl<T: Scalar> SuffixCostTable<T> {
    /// Length `m` of the underlying series (the sentinel is not counted).
    pub fn series_len(&self) -> usize {
        self.entries.len() - 1
    }

    #[inline]
    pub fn get(&self, i: usize) -> T {
        self.entries[i - 1]
    }

    /// Entries `1..=m`, without the trailing sentinel.
    pub fn entries(&self) -> &[T] {
        &self.entries[..self.entries.len() - 1]
    }

    /// Entries `1..=m+1`, including the trailing zero.
    pub fn with_sentinel(&self) -> &[T] {
        &self.entries
    }

    pub fn distance(&self) -> Distance<T> {
        Distance::new(self.entries[0])
    }
}

/// Fills the suffix table for `d(x, q^(m))` in `O(m)`.
///
/// A point whose deviation from `q` is at least `2c` is merged with its
/// right neighbour when that neighbour lies at least `2c` away on the same
/// side of `q`; the pair then shares one move and pays `2c` for the
/// merge/split. Every other point moves straight to `q`.
pub fn cmsm_suffix_table<T: Scalar>(x: &TimeSeries<T>, q: T, c: CostParam<T>) -> SuffixCostTable<T> {
    let c = c.value();
    let two_c = c + c;
    let m = x.len();
    let xs = x.as_slice();
    let mut entries = vec![T::zero(); m + 1];
    entries[m - 1] = (xs[m - 1] - q).abs();
    for k in (0..m - 1).rev() {
        let here = xs[k] - q;
        let next = xs[k + 1] - q;
        let grouped = (here >= two_c && next >= two_c) || (here <= -two_c && next <= -two_c);
        entries[k] = if grouped {
            entries[k + 1] + two_c + (here.abs() - next.abs()).max(T::zero())
        } else {
            entries[k + 1] + here.abs()
        };
    }
    SuffixCostTable { entries }
}

/// Exact MSM distance between `x` and the constant series `q^(m)`.
pub fn cmsm_distance<T: Scalar>(x: &TimeSeries<T>, q: T, c: CostParam<T>) -> Distance<T> {
    cmsm_suffix_table(x, q, c).distance()
}
