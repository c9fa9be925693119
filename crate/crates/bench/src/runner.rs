use std::collections::BTreeMap;
use std::time::Instant;

use msm_core::{CostParam, MsmError, Series};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algorithm::ReferenceKey;
use crate::report::{BenchReport, BenchRow, PairFailure};
use crate::{Algorithm, Dataset, DEFAULT_C, DEFAULT_Q};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchSettings {
    pub c: f64,
    pub q: f64,
    /// Upper limit on sampled pairs per dataset.
    pub pairs: usize,
    /// Timed runs per pair after one warm-up run.
    pub reps: usize,
    pub seed: u64,
}

impl Default for BenchSettings {
    fn default() -> Self {
        Self {
            c: DEFAULT_C,
            q: DEFAULT_Q,
            pairs: 1000,
            reps: 5,
            seed: 42,
        }
    }
}

/// Unordered pairs `(i, j)` with `i < j`, all of them when there are at most
/// `limit`, otherwise a seeded sample in ascending order.
pub fn sample_pairs(count: usize, limit: usize, seed: u64) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = (0..count).flat_map(|i| (i + 1..count).map(move |j| (i, j))).collect();
    if all.len() <= limit {
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = sample(&mut rng, all.len(), limit).into_vec();
    picked.sort_unstable();
    picked.into_iter().map(|k| all[k]).collect()
}

/// Relative deviation of `h` from `exact`; `None` when `exact` is zero and
/// `h` is not. Differences at rounding level count as zero.
pub fn relative_error(h: f64, exact: f64) -> Option<f64> {
    let diff = h - exact;
    if diff.abs() <= 1e-12 * (1.0 + exact.abs()) {
        return Some(0.0);
    }
    if exact == 0.0 {
        return None;
    }
    Some((diff / exact).max(0.0))
}

struct Accumulator {
    runtime_ns: f64,
    error: f64,
    error_count: usize,
    prune: f64,
    prune_count: usize,
    pairs: usize,
}

/// Times every algorithm on the sampled pairs of every dataset.
///
/// Reference distances are computed in parallel; timed runs are sequential
/// so measurements do not compete for cores. Failing pairs are recorded in
/// the report and left out of the means.
pub fn run_benchmark(
    datasets: &[Dataset],
    algorithms: &[Algorithm],
    settings: &BenchSettings,
) -> Result<BenchReport, MsmError> {
    let c = CostParam::new(settings.c)?;
    let reps = settings.reps.max(1);
    let mut report = BenchReport::default();

    for ds in datasets {
        let pairs = sample_pairs(ds.len(), settings.pairs, settings.seed);
        let keys: Vec<ReferenceKey> = {
            let mut k: Vec<_> = algorithms.iter().map(Algorithm::reference_key).collect();
            k.sort();
            k.dedup();
            k
        };
        let references: Vec<BTreeMap<ReferenceKey, f64>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let (x, y) = (&ds.series[i].1, &ds.series[j].1);
                keys.iter()
                    .map(|&key| {
                        let alg = algorithms.iter().find(|a| a.reference_key() == key).expect("key from list");
                        (key, alg.reference(x, y, c, settings.q))
                    })
                    .collect()
            })
            .collect();

        for alg in algorithms {
            let mut acc = Accumulator {
                runtime_ns: 0.0,
                error: 0.0,
                error_count: 0,
                prune: 0.0,
                prune_count: 0,
                pairs: 0,
            };
            for (&(i, j), refs) in pairs.iter().zip(&references) {
                let (x, y) = (&ds.series[i].1, &ds.series[j].1);
                let fail = |reason: String| PairFailure {
                    dataset: ds.name.clone(),
                    algorithm: alg.name().to_string(),
                    pair: (i, j),
                    reason,
                };
                match time_pair(alg, x, y, c, settings.q, reps) {
                    Err(e) => report.failures.push(fail(e.to_string())),
                    Ok((value, ns, prune)) => {
                        let exact = refs[&alg.reference_key()];
                        match relative_error(value, exact) {
                            None => report
                                .failures
                                .push(fail(format!("relative error undefined: {value} against exact 0"))),
                            Some(err) => {
                                acc.runtime_ns += ns;
                                acc.error += err;
                                acc.error_count += 1;
                                acc.pairs += 1;
                                if let Some(p) = prune {
                                    acc.prune += p;
                                    acc.prune_count += 1;
                                }
                            }
                        }
                    }
                }
            }
            let mean = |sum: f64, n: usize| if n == 0 { 0.0 } else { sum / n as f64 };
            report.rows.push(BenchRow {
                dataset: ds.name.clone(),
                algorithm: alg.name().to_string(),
                params: alg.params(settings.c, settings.q),
                mean_runtime_ns: mean(acc.runtime_ns, acc.pairs),
                mean_relative_error: mean(acc.error, acc.error_count),
                mean_prune_ratio: alg.is_pruned().then(|| mean(acc.prune, acc.prune_count)),
                pair_count: acc.pairs,
            });
        }
    }

    // Group rows per algorithm configuration, each group sorted by error.
    report.rows.sort_by(|a, b| {
        (&a.algorithm, &a.params)
            .cmp(&(&b.algorithm, &b.params))
            .then(a.mean_relative_error.total_cmp(&b.mean_relative_error))
            .then(a.dataset.cmp(&b.dataset))
    });
    Ok(report)
}

/// One warm-up run, then `reps` timed runs. Returns the value, the mean
/// runtime in nanoseconds and the prune ratio when the algorithm has one.
fn time_pair(
    alg: &Algorithm,
    x: &Series,
    y: &Series,
    c: CostParam<f64>,
    q: f64,
    reps: usize,
) -> Result<(f64, f64, Option<f64>), MsmError> {
    let warm = alg.run(x, y, c, q)?;
    let started = Instant::now();
    for _ in 0..reps {
        std::hint::black_box(alg.run(std::hint::black_box(x), std::hint::black_box(y), c, q)?);
    }
    let ns = started.elapsed().as_nanos() as f64 / reps as f64;
    Ok((warm.value, ns, warm.stats.map(|s| s.prune_ratio())))
}
