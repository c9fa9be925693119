use super::{orient, HeuristicResult, SuffixPath};
use crate::{cmsm_suffix_table, CostParam, Distance, MsmError, Scalar, TimeSeries};

/// Upper bound through a constant series `q`:
/// `d(x, q^(m)) + d(y, q^(n)) + (m - n) c` with `m >= n`.
///
/// The suffix path pairs row `i` with column `max(1, i - (m - n))` and prices
/// each suffix the same way, so `R[i]` is again a triangle bound.
pub fn triangle_heuristic<T: Scalar>(
    x: &TimeSeries<T>,
    y: &TimeSeries<T>,
    c: CostParam<T>,
    q: T,
) -> Result<HeuristicResult<T>, MsmError> {
    let (a, b, swapped) = orient(x, y);
    let (m, n) = (a.len(), b.len());
    let ta = cmsm_suffix_table(&TimeSeries::from_slice(a)?, q, c);
    let tb = cmsm_suffix_table(&TimeSeries::from_slice(b)?, q, c);
    let cv = c.value();

    let columns: Vec<usize> = (1..=m).map(|i| i.saturating_sub(m - n).max(1)).collect();
    let mut costs: Vec<T> = columns
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            let i = k + 1;
            let surplus = (m - i + 1) - (n - p + 1);
            ta.get(i) + tb.get(p) + T::from_usize(surplus).expect("length fits scalar") * cv
        })
        .collect();
    costs.push(T::zero());

    Ok(HeuristicResult {
        value: Distance::new(costs[0]),
        suffix_path: Some(SuffixPath::new(costs, columns)),
        swapped,
    })
}
