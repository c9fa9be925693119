use super::region::{forward, suffix_costs, Region};
use super::{diagonal_column, orient, HeuristicResult, SuffixPath};
use crate::{CostParam, Distance, MsmError, Scalar, TimeSeries};

/// Sakoe-Chiba band: `b` cells on each side of the diagonal.
///
/// With `slanted`, the band follows the line from `(0, 0)` to `(m, n)`
/// instead of the main diagonal, so unequal lengths are always feasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandSpec {
    pub b: usize,
    pub slanted: bool,
}

impl BandSpec {
    pub fn straight(b: usize) -> Self {
        Self { b, slanted: false }
    }

    pub fn slanted(b: usize) -> Self {
        Self { b, slanted: true }
    }

    /// Overall bandwidth `2b + 1`.
    pub fn bandwidth(&self) -> usize {
        2 * self.b + 1
    }

    /// Half-width as a fraction of `len`, rounded to the nearest cell.
    pub fn relative(fraction: f64, len: usize, slanted: bool) -> Self {
        Self {
            b: (fraction * len as f64).round() as usize,
            slanted,
        }
    }

    /// Column ranges of the band for an `m x n` table with `m >= n`.
    pub(crate) fn region(&self, m: usize, n: usize) -> Result<Region, MsmError> {
        let b = self.b;
        let ranges = if self.slanted {
            // Membership |i*n/m - j| <= b, rounded outward, in exact integers.
            let (mi, ni, bi) = (m as i128, n as i128, b as i128);
            (1..=m)
                .map(|i| {
                    let i = i as i128;
                    let lo = (i * ni - bi * mi).div_euclid(mi);
                    let hi = -(-(i * ni + bi * mi)).div_euclid(mi);
                    (lo.max(1) as usize, hi.min(ni) as usize)
                })
                .collect()
        } else {
            if m - n > b {
                return Err(MsmError::InfeasibleBand { b, m, n });
            }
            (1..=m)
                .map(|i| (i.saturating_sub(b).max(1), (i + b).min(n)))
                .collect()
        };
        Region::new(ranges)
    }
}

/// Itakura parallelogram with shape parameter `d` in `(0, 1]`.
///
/// `d = 1` collapses to the diagonal; smaller values widen the middle of the
/// table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ItakuraSpec {
    d: f64,
}

impl ItakuraSpec {
    pub fn new(d: f64) -> Result<Self, MsmError> {
        if d > 0.0 && d <= 1.0 {
            Ok(Self { d })
        } else {
            Err(MsmError::InvalidItakura(d))
        }
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// Row ranges `[start_i, end_i]`, widened to whole cells and clipped to
    /// `[1, n]`.
    pub(crate) fn region(&self, m: usize, n: usize) -> Result<Region, MsmError> {
        const SNAP: f64 = 1e-9;
        let d = self.d;
        let (mf, nf) = (m as f64, n as f64);
        let ranges = (1..=m)
            .map(|i| {
                let diag = nf * i as f64 / mf;
                let start = (d * diag).max(diag / d - (1.0 - d) / d * nf);
                let end = (diag / d).min(d * diag + (1.0 - d) * nf);
                let lo = (start + SNAP).floor().max(1.0) as usize;
                let hi = ((end - SNAP).ceil() as usize).min(n);
                if i == m {
                    (lo.min(n), n)
                } else {
                    (lo, hi)
                }
            })
            .collect();
        Region::new(ranges)
    }
}

fn restricted<T: Scalar>(a: &[T], b: &[T], c: T, region: &Region, swapped: bool) -> HeuristicResult<T> {
    let (m, n) = (a.len(), b.len());
    let value = forward(a, b, c, region);
    let columns: Vec<usize> = (1..=m).map(|i| diagonal_column(i, m, n)).collect();
    let costs = suffix_costs(a, b, c, region, &columns);
    HeuristicResult {
        value: Distance::new(value),
        suffix_path: Some(SuffixPath::new(costs, columns)),
        swapped,
    }
}

/// MSM recursion restricted to a Sakoe-Chiba band.
///
/// Rows run over the longer series. A straight band fails when the length
/// difference exceeds `b`, because `(m, n)` lies outside it.
pub fn sakoe_chiba<T: Scalar>(
    x: &TimeSeries<T>,
    y: &TimeSeries<T>,
    c: CostParam<T>,
    band: BandSpec,
) -> Result<HeuristicResult<T>, MsmError> {
    let (a, b, swapped) = orient(x, y);
    let region = band.region(a.len(), b.len())?;
    Ok(restricted(a, b, c.value(), &region, swapped))
}

/// MSM recursion restricted to an Itakura parallelogram.
pub fn itakura<T: Scalar>(
    x: &TimeSeries<T>,
    y: &TimeSeries<T>,
    c: CostParam<T>,
    spec: ItakuraSpec,
) -> Result<HeuristicResult<T>, MsmError> {
    let (a, b, swapped) = orient(x, y);
    let region = spec.region(a.len(), b.len())?;
    Ok(restricted(a, b, c.value(), &region, swapped))
}
