//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use msm_bench::algorithm::PrunedSpec;
use msm_bench::{read_csv, Algorithm};
use msm_core::{
    cmsm_distance, cmsm_suffix_table, dtw_full, greedy_heuristic, itakura, lb_ms, lb_t, msm_classic, msm_improved,
    pruned_dtw, pruned_msm, sakoe_chiba, triangle_heuristic, z_normalize, BandSpec, CostMode, CostParam, DtwConfig,
    DtwUpperBound, ItakuraSpec, PruneConfig, Series,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;
const COSTS: [f64; 4] = [0.0, 0.1, 0.5, 1.0];

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn series(v: &[f64]) -> Series {
    Series::from_slice(v).unwrap()
}

fn cost(c: f64) -> CostParam<f64> {
    CostParam::new(c).unwrap()
}

fn random_series(r: &mut ChaCha8Rng, min_len: usize, max_len: usize) -> Series {
    let len = r.gen_range(min_len..=max_len);
    Series::new((0..len).map(|_| r.gen_range(-3.0..=3.0)).collect()).unwrap()
}

fn pick_cost(r: &mut ChaCha8Rng) -> f64 {
    COSTS[r.gen_range(0..COSTS.len())]
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(a: f64, b: f64, what: &str) -> Result<(), String> {
    ensure((a - b).abs() <= TOL, || format!("{what}: {a} vs {b}"))
}

/// Remaining cost from `(i, j)`, with `|z| c` for an empty side.
fn suffix_distance(x: &[f64], y: &[f64], c: f64) -> f64 {
    match (x.is_empty(), y.is_empty()) {
        (true, true) => 0.0,
        (true, false) => y.len() as f64 * c,
        (false, true) => x.len() as f64 * c,
        _ => msm_classic(&series(x), &series(y), cost(c)).0.value(),
    }
}

fn configs(len: usize) -> Vec<PruneConfig<f64>> {
    PrunedSpec::matrix().iter().map(|s| s.config(len, 0.0).unwrap()).collect()
}

fn golden_distance() -> Verdict {
    let (x, y) = (series(&[4.0, 5.0, 5.0, 10.0]), series(&[10.0, 7.0, 8.0]));
    let c = cost(0.1);
    close(msm_classic(&x, &y, c).0.value(), 8.3, "classic")?;
    close(msm_improved(&x, &y, c).value(), 8.3, "improved")?;
    let cfgs = configs(4);
    for cfg in &cfgs {
        close(pruned_msm(&x, &y, c, *cfg).unwrap().0.value(), 8.3, &format!("{cfg:?}"))?;
        close(pruned_msm(&y, &x, c, *cfg).unwrap().0.value(), 8.3, &format!("swapped {cfg:?}"))?;
    }
    Ok(format!("8.3 from classic, improved and {} pruned configurations", cfgs.len()))
}

fn golden_table() -> Verdict {
    let x = series(&[5.0, 8.0, 5.0, 2.0, 1.0, 2.0, 4.0, 4.0]);
    let t = cmsm_suffix_table(&x, 5.0, cost(1.0));
    ensure(t.entries() == [13.0, 13.0, 10.0, 10.0, 8.0, 5.0, 2.0, 1.0], || {
        format!("{:?}", t.entries())
    })?;
    Ok("table [13,13,10,10,8,5,2,1]".into())
}

fn oracle_equivalence() -> Verdict {
    let mut r = rng(3);
    let specs = PrunedSpec::matrix();
    let pairs = 1000;
    for k in 0..pairs {
        let x = random_series(&mut r, 1, 64);
        let y = random_series(&mut r, 1, 64);
        let c = cost(pick_cost(&mut r));
        let exact = msm_classic(&x, &y, c).0.value();
        close(msm_improved(&x, &y, c).value(), exact, &format!("pair {k} improved"))?;
        let len = x.len().max(y.len());
        for spec in &specs {
            let v = pruned_msm(&x, &y, c, spec.config(len, 0.0).unwrap()).unwrap().0.value();
            close(v, exact, &format!("pair {k} pruned {spec}"))?;
        }
    }
    Ok(format!("{pairs} pairs x {} pruned configurations", specs.len()))
}

fn cmsm_oracle() -> Verdict {
    let mut r = rng(4);
    let cases = 500;
    for k in 0..cases {
        let x = random_series(&mut r, 1, 40);
        let q = if r.gen_bool(0.3) { 0.0 } else { r.gen_range(-3.0..3.0) };
        let c = pick_cost(&mut r);
        let constant = Series::constant(q, x.len()).unwrap();
        close(
            cmsm_distance(&x, q, cost(c)).value(),
            msm_classic(&x, &constant, cost(c)).0.value(),
            &format!("case {k}"),
        )?;
        if x.len() <= 16 {
            let t = cmsm_suffix_table(&x, q, cost(c));
            for i in 1..=x.len() {
                let rest = &x.as_slice()[i - 1..];
                let want = suffix_distance(rest, &vec![q; rest.len()], c);
                close(t.get(i), want, &format!("case {k} entry {i}"))?;
            }
        }
    }
    Ok(format!("{cases} cases with suffix entries checked up to length 16"))
}

fn metric_properties() -> Verdict {
    let mut r = rng(5);
    let triples = 500;
    for k in 0..triples {
        let (x, y, z) = (random_series(&mut r, 1, 20), random_series(&mut r, 1, 20), random_series(&mut r, 1, 20));
        let c = cost(pick_cost(&mut r));
        let d = |a: &Series, b: &Series| msm_classic(a, b, c).0.value();
        let (xy, yx) = (d(&x, &y), d(&y, &x));
        ensure(xy == yx, || format!("triple {k}: asymmetric {xy} vs {yx}"))?;
        ensure(d(&x, &x) == 0.0, || format!("triple {k}: d(x,x) != 0"))?;
        ensure(xy <= d(&x, &z) + d(&z, &y) + TOL, || format!("triple {k}: triangle inequality"))?;
    }
    Ok(format!("{triples} triples"))
}

fn upper_bounds() -> Verdict {
    let mut r = rng(6);
    let pairs = 500;
    for k in 0..pairs {
        let x = random_series(&mut r, 1, 32);
        let y = random_series(&mut r, 1, 32);
        let cv = pick_cost(&mut r);
        let c = cost(cv);
        let exact = msm_classic(&x, &y, c).0.value();
        let above = |v: f64, what: &str| ensure(v >= exact - TOL, || format!("pair {k} {what}: {v} < {exact}"));
        above(greedy_heuristic(&x, &y, c).value.value(), "greedy")?;
        above(triangle_heuristic(&x, &y, c, 0.0).unwrap().value.value(), "triangle")?;
        let len = x.len().max(y.len());
        let mut last = f64::INFINITY;
        for frac in [0.0, 0.1, 0.2] {
            let v = sakoe_chiba(&x, &y, c, BandSpec::relative(frac, len, true)).unwrap().value.value();
            above(v, "sakoe")?;
            ensure(v <= last + TOL, || format!("pair {k}: band value rose at {frac}"))?;
            last = v;
        }
        let mut last = f64::INFINITY;
        for d in [0.75, 2.0 / 3.0, 0.5] {
            let v = itakura(&x, &y, c, ItakuraSpec::new(d).unwrap()).unwrap().value.value();
            above(v, "itakura")?;
            ensure(v <= last + TOL, || format!("pair {k}: parallelogram value rose at {d}"))?;
            last = v;
        }
    }
    Ok(format!("{pairs} pairs, b in 0/10/20%, d in 3/4, 2/3, 1/2"))
}

fn lower_bounds() -> Verdict {
    let mut r = rng(7);
    let instances = 200;
    let mut cells = 0usize;
    for k in 0..instances {
        let x = random_series(&mut r, 1, 8);
        let y = random_series(&mut r, 1, 8);
        let cv = pick_cost(&mut r);
        let (m, n) = (x.len(), y.len());
        for i in 1..=m {
            for j in 1..=n {
                let rest = suffix_distance(&x.as_slice()[i..], &y.as_slice()[j..], cv);
                let lb = lb_ms(i, j, m, n, cost(cv));
                ensure(lb <= rest + TOL, || format!("instance {k} lb_ms({i},{j}) = {lb} > {rest}"))?;
                cells += 1;
            }
        }
        let q = r.gen_range(-1.0..1.0);
        let (d, table) = msm_classic(&x, &y, cost(cv));
        let (dx, dy) = (cmsm_suffix_table(&x, q, cost(cv)), cmsm_suffix_table(&y, q, cost(cv)));
        for (i, j) in table.optimal_path(&x, &y, cost(cv)) {
            let lb = lb_t(i, j, &dx, &dy, &x, &y, q, cost(cv));
            ensure(table.get(i, j) + lb <= d.value() + TOL, || format!("instance {k} lb_t at ({i},{j})"))?;
        }
    }
    Ok(format!("{instances} instances, {cells} cells for lb_ms, optimal paths for lb_t"))
}

fn dtw_equivalence() -> Verdict {
    let mut r = rng(8);
    let pairs = 500;
    for k in 0..pairs {
        let x = random_series(&mut r, 1, 64);
        let y = random_series(&mut r, 1, 64);
        for mode in [CostMode::Squared, CostMode::Absolute] {
            let full = dtw_full(&x, &y, DtwConfig::new(mode, DtwUpperBound::Infinite)).value();
            let (p, _) = pruned_dtw(&x, &y, DtwConfig::new(mode, DtwUpperBound::EuclideanPath));
            close(p.value(), full, &format!("pair {k} {mode:?}"))?;
        }
    }
    Ok(format!("{pairs} pairs in both cost modes"))
}

fn random_walk(r: &mut ChaCha8Rng, len: usize) -> Series {
    let mut v = 0.0;
    let walk = (0..len)
        .map(|_| {
            v += r.gen_range(-1.0..1.0);
            v
        })
        .collect();
    z_normalize(&Series::new(walk).unwrap())
}

fn pruning_effectiveness() -> Verdict {
    let mut r = rng(9);
    let pairs = 100;
    let c = cost(0.5);
    let mut pruned_pairs = 0;
    for k in 0..pairs {
        let (x, y) = (random_walk(&mut r, 1024), random_walk(&mut r, 1024));
        let (d, stats) = pruned_msm(&x, &y, c, PruneConfig::default()).unwrap();
        let exact = msm_improved(&x, &y, c).value();
        ensure((d.value() - exact).abs() <= TOL * (1.0 + exact), || format!("pair {k}: {} vs {exact}", d.value()))?;
        if stats.cells_computed < stats.cells_total {
            pruned_pairs += 1;
        }
    }
    ensure(pruned_pairs * 10 >= pairs * 9, || format!("only {pruned_pairs}/{pairs} pairs pruned"))?;
    Ok(format!("{pruned_pairs}/{pairs} pairs computed fewer than m*n cells"))
}

fn bench_run() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("bench.csv");
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let started = Instant::now();
    let run = Command::new(env!("CARGO_BIN_EXE_msm"))
        .args(["bench", "--data", data, "--out"])
        .arg(&out)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    let stderr = String::from_utf8_lossy(&run.stderr);
    ensure(run.status.success(), || format!("exit {:?}: {stderr}", run.status.code()))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    let rows = read_csv(std::fs::File::open(&out).map_err(|e| e.to_string())?)?;
    ensure(!rows.is_empty(), || "no rows".into())?;
    for row in &rows {
        let alg: Algorithm = row.algorithm.parse().map_err(|e| format!("{e}"))?;
        ensure(row.mean_relative_error >= 0.0, || format!("negative error in {row:?}"))?;
        if alg.is_exact() {
            ensure(row.mean_relative_error == 0.0, || format!("exact row with error: {row:?}"))?;
        }
        if let Some(p) = row.mean_prune_ratio {
            ensure((0.0..=1.0).contains(&p), || format!("prune ratio out of range: {row:?}"))?;
        }
    }
    let comparison: Vec<&str> = stderr.lines().filter(|l| l.contains("pruned msm")).collect();
    ensure(comparison.len() == 2, || format!("missing pruned msm vs pruned dtw lines: {stderr}"))?;
    for line in &comparison {
        println!("    {line}");
    }
    Ok(format!("{} rows in {:.1} s", rows.len(), elapsed.as_secs_f64()))
}

fn selftest_run() -> Verdict {
    let started = Instant::now();
    let run = Command::new(env!("CARGO_BIN_EXE_msm"))
        .arg("selftest")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    let stdout = String::from_utf8_lossy(&run.stdout);
    ensure(run.status.success(), || format!("exit {:?}: {stdout}", run.status.code()))?;
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    ensure(stdout.matches("PASS").count() == 3, || stdout.to_string())?;
    Ok(format!("exit 0 in {:.2} s", elapsed.as_secs_f64()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("golden distance", golden_distance),
        ("constant-series golden table", golden_table),
        ("oracle equivalence", oracle_equivalence),
        ("constant-series oracle", cmsm_oracle),
        ("metric properties", metric_properties),
        ("upper-bound validity", upper_bounds),
        ("lower-bound validity", lower_bounds),
        ("pruned DTW equivalence", dtw_equivalence),
        ("pruning effectiveness", pruning_effectiveness),
        ("bench on bundled data", bench_run),
        ("selftest", selftest_run),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let verdict = check();
        let secs = started.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail} ({secs:.1} s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {detail} ({secs:.1} s)", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
