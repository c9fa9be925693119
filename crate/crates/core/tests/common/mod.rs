#![allow(dead_code)]

use std::collections::HashMap;

use msm_core::{CostParam, Series};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const COSTS: [f64; 4] = [0.0, 0.1, 0.5, 1.0];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ts(v: &[f64]) -> Series {
    Series::from_slice(v).unwrap()
}

pub fn cost(c: f64) -> CostParam<f64> {
    CostParam::new(c).unwrap()
}

/// Values in [-3, 3]; every third series is rounded to one decimal so that
/// ties and exact threshold hits show up.
pub fn random_series(rng: &mut ChaCha8Rng, min_len: usize, max_len: usize) -> Series {
    let len = rng.gen_range(min_len..=max_len);
    let coarse = rng.gen_ratio(1, 3);
    let values = (0..len)
        .map(|_| {
            let v: f64 = rng.gen_range(-3.0..=3.0);
            if coarse {
                (v * 10.0).round() / 10.0
            } else {
                v
            }
        })
        .collect();
    Series::new(values).unwrap()
}

fn step_cost(xi: f64, prev: f64, target: f64, c: f64) -> f64 {
    let lo = prev.min(target);
    let hi = prev.max(target);
    if lo <= xi && xi <= hi {
        c
    } else {
        c + (xi - prev).abs().min((xi - target).abs())
    }
}

/// Memoised top-down recursion with explicit first-row/first-column cases
/// and base `D[1,1] = |x_1 - y_1|`. Shares no code with the crate.
pub fn recursive_oracle(x: &[f64], y: &[f64], c: f64) -> f64 {
    fn go(i: usize, j: usize, x: &[f64], y: &[f64], c: f64, memo: &mut HashMap<(usize, usize), f64>) -> f64 {
        if let Some(&v) = memo.get(&(i, j)) {
            return v;
        }
        let (xi, yj) = (x[i - 1], y[j - 1]);
        let v = match (i, j) {
            (1, 1) => (xi - yj).abs(),
            (_, 1) => go(i - 1, 1, x, y, c, memo) + step_cost(xi, x[i - 2], yj, c),
            (1, _) => go(1, j - 1, x, y, c, memo) + step_cost(yj, xi, y[j - 2], c),
            _ => {
                let mv = go(i - 1, j - 1, x, y, c, memo) + (xi - yj).abs();
                let merge = go(i - 1, j, x, y, c, memo) + step_cost(xi, x[i - 2], yj, c);
                let split = go(i, j - 1, x, y, c, memo) + step_cost(yj, xi, y[j - 2], c);
                mv.min(merge).min(split)
            }
        };
        memo.insert((i, j), v);
        v
    }
    let mut memo = HashMap::new();
    go(x.len(), y.len(), x, y, c, &mut memo)
}

/// Suffix distance with the empty-suffix convention `d(empty, z) = |z| c`.
pub fn suffix_distance(x: &[f64], y: &[f64], c: f64) -> f64 {
    match (x.is_empty(), y.is_empty()) {
        (true, true) => 0.0,
        (true, false) => y.len() as f64 * c,
        (false, true) => x.len() as f64 * c,
        _ => recursive_oracle(x, y, c),
    }
}

pub fn assert_close(a: f64, b: f64, what: &str) {
    assert!((a - b).abs() <= 1e-9, "{what}: {a} vs {b}");
}
