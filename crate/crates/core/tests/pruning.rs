mod common;

use common::*;
use msm_core::{
    cmsm_suffix_table, dtw_full, lb_ms, lb_t, msm_classic, msm_improved, pruned_dtw, pruned_msm, BandSpec,
    CostMode, DtwConfig, DtwUpperBound, ItakuraSpec, LowerBound, PruneConfig, Series, UpperBoundSource,
};
use rand::Rng;

fn configs() -> Vec<PruneConfig<f64>> {
    let sources = [
        UpperBoundSource::Greedy,
        UpperBoundSource::Triangle { q: 0.0 },
        UpperBoundSource::Sakoe(BandSpec::slanted(2)),
        UpperBoundSource::Itakura(ItakuraSpec::new(2.0 / 3.0).unwrap()),
        UpperBoundSource::Infinite,
    ];
    let lbs = [
        LowerBound::None,
        LowerBound::Ms,
        LowerBound::Triangle { q: 0.0 },
        LowerBound::MaxOfBoth { q: 0.0 },
    ];
    let mut out = Vec::new();
    for src in sources {
        for update in [false, true] {
            for band in [false, true] {
                for lb in lbs {
                    out.push(PruneConfig::new(src).with_update(update).with_band(band).with_lower_bound(lb));
                }
            }
        }
    }
    out
}

#[test]
fn exact_under_every_configuration() {
    let cfgs = configs();
    assert_eq!(cfgs.len(), 80);
    let mut r = rng(41);
    for _ in 0..150 {
        let x = random_series(&mut r, 1, 32);
        let y = random_series(&mut r, 1, 32);
        let c = COSTS[r.gen_range(0..COSTS.len())];
        let exact = msm_classic(&x, &y, cost(c)).0.value();
        for cfg in &cfgs {
            let (d, stats) = pruned_msm(&x, &y, cost(c), *cfg).unwrap();
            assert_close(d.value(), exact, &format!("{cfg:?}"));
            assert!(stats.cells_computed <= stats.cells_total);
            assert!(stats.ub_final <= stats.ub_initial);
            assert!(stats.ub_final >= exact - 1e-9);
        }
    }
}

#[test]
fn band_never_changes_the_value() {
    let mut r = rng(42);
    for _ in 0..200 {
        let x = random_series(&mut r, 1, 40);
        let y = random_series(&mut r, 1, 40);
        let c = cost(COSTS[r.gen_range(1..COSTS.len())]);
        let base = PruneConfig::new(UpperBoundSource::Greedy).with_lower_bound(LowerBound::Ms);
        let (a, _) = pruned_msm(&x, &y, c, base).unwrap();
        let (b, _) = pruned_msm(&x, &y, c, base.with_band(true)).unwrap();
        assert_eq!(a.value(), b.value());
    }
}

#[test]
fn lb_ms_bounds_suffix_distances() {
    let mut r = rng(43);
    for _ in 0..200 {
        let x = random_series(&mut r, 1, 7);
        let y = random_series(&mut r, 1, 7);
        let c = COSTS[r.gen_range(0..COSTS.len())];
        let (m, n) = (x.len(), y.len());
        for i in 1..=m {
            for j in 1..=n {
                let rest = suffix_distance(&x.as_slice()[i..], &y.as_slice()[j..], c);
                assert!(lb_ms(i, j, m, n, cost(c)) <= rest + 1e-9);
            }
        }
    }
}

#[test]
fn lb_t_never_overshoots_on_optimal_paths() {
    let mut r = rng(44);
    for _ in 0..300 {
        let x = random_series(&mut r, 1, 12);
        let y = random_series(&mut r, 1, 12);
        let c = COSTS[r.gen_range(0..COSTS.len())];
        let q = if r.gen_bool(0.5) { 0.0 } else { r.gen_range(-1.0..1.0) };
        let (d, table) = msm_classic(&x, &y, cost(c));
        let (dx, dy) = (cmsm_suffix_table(&x, q, cost(c)), cmsm_suffix_table(&y, q, cost(c)));
        for (i, j) in table.optimal_path(&x, &y, cost(c)) {
            let bound = lb_t(i, j, &dx, &dy, &x, &y, q, cost(c));
            assert!(table.get(i, j) + bound <= d.value() + 1e-9, "cell ({i},{j})");
        }
    }
}

#[test]
fn divergent_inputs_prune_cells() {
    // Phase-shifted sines: the greedy bound is tight enough that cells far
    // from the diagonal are skipped.
    let x = Series::new((0..40).map(|i| (i as f64 * 0.3).sin()).collect()).unwrap();
    let y = Series::new((0..40).map(|i| (i as f64 * 0.3 + 0.4).sin()).collect()).unwrap();
    let (d, stats) = pruned_msm(&x, &y, cost(0.5), PruneConfig::default()).unwrap();
    assert_close(d.value(), msm_improved(&x, &y, cost(0.5)).value(), "value");
    assert!(stats.cells_computed < stats.cells_total);
    let ub = msm_core::greedy_heuristic(&x, &y, cost(0.5)).value.value();
    let moves: f64 = x.as_slice().iter().zip(y.as_slice()).map(|(a, b)| (a - b).abs()).sum();
    assert!(ub <= moves);
}

#[test]
fn unpruned_counts_full_table() {
    let mut r = rng(45);
    for _ in 0..50 {
        let x = random_series(&mut r, 1, 30);
        let y = random_series(&mut r, 1, 30);
        let (d, stats) = pruned_msm(&x, &y, cost(0.5), PruneConfig::unpruned()).unwrap();
        assert_eq!(d.value(), msm_improved(&x, &y, cost(0.5)).value());
        assert_eq!(stats.cells_computed, (x.len() * y.len()) as u64);
    }
}

#[test]
fn pruned_dtw_matches_full() {
    let mut r = rng(46);
    for _ in 0..500 {
        let x = random_series(&mut r, 1, 40);
        let y = random_series(&mut r, 1, 40);
        for mode in [CostMode::Squared, CostMode::Absolute] {
            let full = dtw_full(&x, &y, DtwConfig::new(mode, DtwUpperBound::Infinite)).value();
            let (d, stats) = pruned_dtw(&x, &y, DtwConfig::new(mode, DtwUpperBound::EuclideanPath));
            assert_close(d.value(), full, "pruned dtw");
            assert!(stats.cells_computed <= stats.cells_total);
            assert_eq!(full, dtw_full(&y, &x, DtwConfig::new(mode, DtwUpperBound::Infinite)).value());
            assert!(full >= 0.0);
        }
        assert_eq!(dtw_full(&x, &x, DtwConfig::default()).value(), 0.0);
    }
}
