use msm_core::{cmsm_suffix_table, msm_classic, msm_improved, pruned_msm, CostParam, MsmError, Series};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithm::PrunedSpec;

/// Outcome of one self-test check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

const TOL: f64 = 1e-9;

fn series(v: &[f64]) -> Series {
    Series::from_slice(v).expect("finite literal")
}

fn golden_pair() -> Result<Check, MsmError> {
    let (x, y) = (series(&[4.0, 5.0, 5.0, 10.0]), series(&[10.0, 7.0, 8.0]));
    let c = CostParam::new(0.1)?;
    let mut worst = 0.0f64;
    let mut values = vec![msm_classic(&x, &y, c).0.value(), msm_improved(&x, &y, c).value()];
    for spec in PrunedSpec::matrix() {
        values.push(pruned_msm(&x, &y, c, spec.config(4, 0.0)?)?.0.value());
    }
    for v in &values {
        worst = worst.max((v - 8.3).abs());
    }
    Ok(Check {
        name: "golden distance 8.3",
        passed: worst <= TOL,
        detail: format!("{} evaluations, max deviation {worst:e}", values.len()),
    })
}

fn golden_table() -> Result<Check, MsmError> {
    let x = series(&[5.0, 8.0, 5.0, 2.0, 1.0, 2.0, 4.0, 4.0]);
    let table = cmsm_suffix_table(&x, 5.0, CostParam::new(1.0)?);
    let expected = [13.0, 13.0, 10.0, 10.0, 8.0, 5.0, 2.0, 1.0];
    Ok(Check {
        name: "constant-series suffix table",
        passed: table.entries() == expected,
        detail: format!("{:?}", table.entries()),
    })
}

fn oracle_slice(cases: usize) -> Result<Check, MsmError> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let specs = PrunedSpec::matrix();
    let mut worst = 0.0f64;
    for _ in 0..cases {
        let draw = |rng: &mut ChaCha8Rng| {
            let len = rng.gen_range(1..=64);
            Series::new((0..len).map(|_| rng.gen_range(-3.0..=3.0)).collect()).expect("finite")
        };
        let (x, y) = (draw(&mut rng), draw(&mut rng));
        let c = CostParam::new([0.0, 0.1, 0.5, 1.0][rng.gen_range(0..4)])?;
        let exact = msm_classic(&x, &y, c).0.value();
        let len = x.len().max(y.len());
        worst = worst.max((msm_improved(&x, &y, c).value() - exact).abs());
        for spec in &specs {
            let v = pruned_msm(&x, &y, c, spec.config(len, 0.0)?)?.0.value();
            worst = worst.max((v - exact).abs());
        }
    }
    Ok(Check {
        name: "random pairs against the full table",
        passed: worst <= TOL,
        detail: format!("{cases} pairs x {} configurations, max deviation {worst:e}", specs.len() + 1),
    })
}

/// Golden examples plus a 50-pair oracle comparison of every exact routine.
pub fn run_selftest() -> Vec<Check> {
    let fold = |name: &'static str, r: Result<Check, MsmError>| {
        r.unwrap_or_else(|e| Check {
            name,
            passed: false,
            detail: e.to_string(),
        })
    };
    vec![
        fold("golden distance 8.3", golden_pair()),
        fold("constant-series suffix table", golden_table()),
        fold("random pairs against the full table", oracle_slice(50)),
    ]
}
