//! Benchmark harness for the `msm-core` distances.
//!
//! Loads UCR-format datasets, times every requested algorithm on sampled
//! series pairs, measures relative error against the exact distance and
//! writes one CSV row per dataset and algorithm.

pub mod algorithm;
pub mod dataset;
pub mod report;
pub mod runner;
pub mod selftest;

pub use algorithm::{Algorithm, AlgorithmParseError, Outcome};
pub use dataset::{load_dir, load_ucr_tsv, DataError, Dataset};
pub use report::{read_csv, write_csv, BenchReport, BenchRow, PairFailure, CSV_HEADER};
pub use runner::{relative_error, run_benchmark, sample_pairs, BenchSettings};
pub use selftest::{run_selftest, Check};

/// Default split/merge cost.
pub const DEFAULT_C: f64 = 0.5;
/// Default constant series level for the triangle bounds on z-normalized data.
pub const DEFAULT_Q: f64 = 0.0;
