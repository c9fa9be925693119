use crate::{split_merge_cost, CostParam, Distance, Scalar, TimeSeries};

/// The complete `(m+1) x (n+1)` table of prefix transformation costs.
///
/// `get(i, j)` is the cost of transforming `(x_1..x_i)` into `(y_1..y_j)`.
/// Row 0 and column 0 hold the border: `get(0, 0) == 0`, everything else on
/// the border is [`Scalar::sentinel`].
#[derive(Debug, Clone, PartialEq)]
pub struct FullTable<T> {
    rows: usize,
    cols: usize,
    cells: Vec<T>,
}

impl<T: Scalar> FullTable<T> {
    /// Number of rows including the border row, `m + 1`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns including the border column, `n + 1`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.cells[i * self.cols + j]
    }

    /// Cells `(i, j)` of one optimal alignment, from `(1, 1)` to `(m, n)`.
    ///
    /// Ties prefer the move predecessor, then merge, then split.
    pub fn optimal_path(&self, x: &TimeSeries<T>, y: &TimeSeries<T>, c: CostParam<T>) -> Vec<(usize, usize)> {
        let c = c.value();
        let (mut i, mut j) = (self.rows - 1, self.cols - 1);
        let mut path = vec![(i, j)];
        while (i, j) != (1, 1) {
            let here = self.get(i, j);
            let tol = T::lit(1e-9) * (T::one() + here.abs());
            let matches = |v: T| (v - here).abs() <= tol;
            let (xi, yj) = (x.at(i), y.at(j));
            if i > 1 && j > 1 && matches(self.get(i - 1, j - 1) + (xi - yj).abs()) {
                i -= 1;
                j -= 1;
            } else if i > 1 && matches(self.get(i - 1, j) + split_merge_cost(xi, x.at(i - 1), yj, c)) {
                i -= 1;
            } else {
                debug_assert!(j > 1);
                j -= 1;
            }
            path.push((i, j));
        }
        path.reverse();
        path
    }
}

/// Exact MSM distance by the full quadratic table.
///
/// This is the reference implementation the faster routines are tested
/// against, so it is written as directly as possible.
pub fn msm_classic<T: Scalar>(
    x: &TimeSeries<T>,
    y: &TimeSeries<T>,
    c: CostParam<T>,
) -> (Distance<T>, FullTable<T>) {
    let (m, n) = (x.len(), y.len());
    let c = c.value();
    let cols = n + 1;
    let mut cells = vec![T::sentinel(); (m + 1) * cols];
    cells[0] = T::zero();

    for i in 1..=m {
        for j in 1..=n {
            let xi = x.at(i);
            let yj = y.at(j);
            // Border predecessors are sentinels, so any finite stand-in for
            // the missing x_0 / y_0 gives the same minimum.
            let x_prev = if i > 1 { x.at(i - 1) } else { xi };
            let y_prev = if j > 1 { y.at(j - 1) } else { yj };
            let mv = cells[(i - 1) * cols + (j - 1)] + (xi - yj).abs();
            let merge = cells[(i - 1) * cols + j] + split_merge_cost(xi, x_prev, yj, c);
            let split = cells[i * cols + (j - 1)] + split_merge_cost(yj, xi, y_prev, c);
            cells[i * cols + j] = mv.min(merge).min(split);
        }
    }

    let table = FullTable {
        rows: m + 1,
        cols,
        cells,
    };
    (Distance::new(table.get(m, n)), table)
}

/// Exact MSM distance with a single row buffer.
///
/// Rows run over the longer series and the buffer spans the shorter one, so
/// memory is `min(m, n) + 1` values.
pub fn msm_improved<T: Scalar>(x: &TimeSeries<T>, y: &TimeSeries<T>, c: CostParam<T>) -> Distance<T> {
    let (rows, cols) = if x.len() >= y.len() {
        (x.as_slice(), y.as_slice())
    } else {
        (y.as_slice(), x.as_slice())
    };
    Distance::new(row_buffer_distance(rows, cols, c.value()))
}

pub(crate) fn row_buffer_distance<T: Scalar>(rows: &[T], cols: &[T], c: T) -> T {
    let n = cols.len();
    let mut row = vec![T::sentinel(); n + 1];
    row[0] = T::zero();

    for (i, &a) in rows.iter().enumerate() {
        let a_prev = if i > 0 { rows[i - 1] } else { a };
        // `diag` carries D[i-1][j-1] while row[j] still holds D[i-1][j].
        let mut diag = row[0];
        row[0] = T::sentinel();
        for j in 1..=n {
            let b = cols[j - 1];
            let b_prev = if j > 1 { cols[j - 2] } else { b };
            let up = row[j];
            let left = row[j - 1];
            let mv = diag + (a - b).abs();
            let merge = up + split_merge_cost(a, a_prev, b, c);
            let split = left + split_merge_cost(b, a, b_prev, c);
            diag = up;
            row[j] = mv.min(merge).min(split);
        }
    }
    row[n]
}
