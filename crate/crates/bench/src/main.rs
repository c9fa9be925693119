use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use msm_bench::algorithm::{LbChoice, PrunedSpec, UbChoice, Width};
use msm_bench::{
    load_dir, load_ucr_tsv, run_benchmark, run_selftest, write_csv, Algorithm, BenchRow, BenchSettings, DataError,
    DEFAULT_C, DEFAULT_Q,
};
use msm_core::{CostMode, CostParam, MsmError};

const USAGE: u8 = 1;
const DATA: u8 = 2;
const ASSERTION: u8 = 3;

const DEFAULT_ALGOS: &str = "classic,improved,cmsm,triangle,greedy,sakoe:0.1,sakoe:0.2,itakura:2/3,pruned,dtw,pruned-dtw";

#[derive(Parser)]
#[command(name = "msm", version, about = "Move-split-merge distances and benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between the first series of two files.
    Dist(DistArgs),
    /// Time algorithms on every dataset file under a directory.
    Bench(BenchArgs),
    /// Check the golden examples and a small oracle comparison.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoName {
    Classic,
    Improved,
    Cmsm,
    Triangle,
    Greedy,
    Sakoe,
    Itakura,
    Pruned,
    Dtw,
    PrunedDtw,
}

#[derive(Clone, Copy, ValueEnum)]
enum UbName {
    Greedy,
    Triangle,
    Sakoe,
    Itakura,
    Inf,
}

#[derive(Clone, Copy, ValueEnum)]
enum LbName {
    None,
    Ms,
    T,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum CostName {
    Squared,
    Abs,
}

#[derive(Args)]
struct DistArgs {
    file_a: PathBuf,
    file_b: PathBuf,
    #[arg(long, value_enum)]
    algo: AlgoName,
    #[arg(long, default_value_t = DEFAULT_C)]
    c: f64,
    /// Sakoe-Chiba half-width in cells; 10% of the longer series if omitted.
    #[arg(long)]
    b: Option<usize>,
    /// Itakura slope parameter in (0, 1].
    #[arg(long, default_value_t = 2.0 / 3.0)]
    d: f64,
    #[arg(long, default_value_t = DEFAULT_Q)]
    q: f64,
    /// Slant the Sakoe-Chiba band along the diagonal of an unequal-length table.
    #[arg(long)]
    slanted: bool,
    #[arg(long, value_enum, default_value = "greedy")]
    ub: UbName,
    #[arg(long)]
    ub_update: bool,
    #[arg(long)]
    band: bool,
    #[arg(long, value_enum, default_value = "ms")]
    lb: LbName,
    /// Pointwise cost for the DTW algorithms.
    #[arg(long, value_enum, default_value = "squared")]
    cost: CostName,
    #[arg(long)]
    znorm: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    data: PathBuf,
    /// Comma-separated algorithm tokens, such as `sakoe:0.1` or `pruned:greedy+u+b+ms`.
    #[arg(long, default_value = DEFAULT_ALGOS)]
    algos: String,
    #[arg(long, default_value_t = DEFAULT_C)]
    c: f64,
    /// Maximum number of pairs per dataset.
    #[arg(long, default_value_t = 1000)]
    pairs: usize,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// CSV destination; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    znorm: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
}

impl From<DataError> for Failure {
    fn from(e: DataError) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<MsmError> for Failure {
    fn from(e: MsmError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Dist(args) => dist(args),
        Command::Bench(args) => bench(args),
        Command::Selftest => return selftest(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(DATA)
        }
    }
}

fn dist_algorithm(a: &DistArgs) -> Algorithm {
    let width = a.b.map_or(Width::Fraction(0.1), Width::Cells);
    let mode = match a.cost {
        CostName::Squared => CostMode::Squared,
        CostName::Abs => CostMode::Absolute,
    };
    match a.algo {
        AlgoName::Classic => Algorithm::Classic,
        AlgoName::Improved => Algorithm::Improved,
        AlgoName::Cmsm => Algorithm::Cmsm,
        AlgoName::Triangle => Algorithm::Triangle,
        AlgoName::Greedy => Algorithm::Greedy,
        AlgoName::Sakoe => Algorithm::Sakoe {
            width,
            slanted: a.slanted,
        },
        AlgoName::Itakura => Algorithm::Itakura { d: a.d },
        AlgoName::Pruned => Algorithm::Pruned(PrunedSpec {
            ub: match a.ub {
                UbName::Greedy => UbChoice::Greedy,
                UbName::Triangle => UbChoice::Triangle,
                UbName::Sakoe => UbChoice::Sakoe(width),
                UbName::Itakura => UbChoice::Itakura(a.d),
                UbName::Inf => UbChoice::Infinite,
            },
            update: a.ub_update,
            band: a.band,
            lb: match a.lb {
                LbName::None => LbChoice::None,
                LbName::Ms => LbChoice::Ms,
                LbName::T => LbChoice::T,
                LbName::Max => LbChoice::Max,
            },
        }),
        AlgoName::Dtw => Algorithm::Dtw(mode),
        AlgoName::PrunedDtw => Algorithm::PrunedDtw(mode),
    }
}

fn dist(args: DistArgs) -> Result<(), Failure> {
    let first = |path: &PathBuf| -> Result<_, Failure> {
        let ds = load_ucr_tsv(path, args.znorm)?;
        Ok(ds.series.into_iter().next().expect("loader rejects empty files").1)
    };
    let (x, y) = (first(&args.file_a)?, first(&args.file_b)?);
    let c = CostParam::new(args.c)?;
    let outcome = dist_algorithm(&args).run(&x, &y, c, args.q)?;
    println!("{}", outcome.value);
    if let Some(stats) = outcome.stats {
        println!("{}/{}", stats.cells_computed, stats.cells_total);
    }
    Ok(())
}

fn bench(args: BenchArgs) -> Result<(), Failure> {
    let algorithms = args
        .algos
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse::<Algorithm>)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    if algorithms.is_empty() {
        return Err(Failure::Usage("no algorithms given".into()));
    }
    CostParam::new(args.c)?;
    let datasets = load_dir(&args.data, args.znorm)?;
    let settings = BenchSettings {
        c: args.c,
        q: DEFAULT_Q,
        pairs: args.pairs,
        reps: args.reps,
        seed: args.seed,
    };

    let started = Instant::now();
    let report = run_benchmark(&datasets, &algorithms, &settings)?;
    let io_err = |e: io::Error| Failure::Data(format!("{}: {e}", args.out.as_ref().map_or("stdout".into(), |p| p.display().to_string())));
    match &args.out {
        Some(path) => write_csv(BufWriter::new(File::create(path).map_err(io_err)?), &report.rows),
        None => write_csv(io::stdout().lock(), &report.rows),
    }
    .map_err(|e| Failure::Data(e.to_string()))?;

    for f in &report.failures {
        eprintln!("skipped {} pair {:?} on {}: {}", f.algorithm, f.pair, f.dataset, f.reason);
    }
    print_comparison(&report.rows);
    eprintln!(
        "{} rows, {} skipped pairs, {:.2} s",
        report.rows.len(),
        report.failures.len(),
        started.elapsed().as_secs_f64()
    );
    Ok(())
}

/// Mean wall-clock times of the pruned MSM and pruned DTW rows per dataset.
fn print_comparison(rows: &[BenchRow]) {
    let mut datasets: Vec<&str> = rows.iter().map(|r| r.dataset.as_str()).collect();
    datasets.sort_unstable();
    datasets.dedup();
    for ds in datasets {
        let find = |alg: &str| rows.iter().find(|r| r.dataset == ds && r.algorithm == alg);
        if let (Some(msm), Some(dtw)) = (find("pruned"), find("pruned-dtw")) {
            eprintln!(
                "{ds}: pruned msm {:.0} ns, pruned dtw {:.0} ns, ratio {:.3}",
                msm.mean_runtime_ns,
                dtw.mean_runtime_ns,
                msm.mean_runtime_ns / dtw.mean_runtime_ns
            );
        }
    }
}

fn selftest() -> ExitCode {
    let started = Instant::now();
    let checks = run_selftest();
    let mut ok = true;
    for check in &checks {
        println!("{} {}: {}", if check.passed { "PASS" } else { "FAIL" }, check.name, check.detail);
        ok &= check.passed;
    }
    println!("{:.2} s", started.elapsed().as_secs_f64());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(ASSERTION)
    }
}
