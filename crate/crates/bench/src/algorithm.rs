use std::fmt;
use std::str::FromStr;

use msm_core::{
    cmsm_distance, dtw_full, greedy_heuristic, itakura, msm_classic, msm_improved, pruned_dtw, pruned_msm,
    sakoe_chiba, triangle_heuristic, BandSpec, CostMode, CostParam, DtwConfig, DtwUpperBound, ItakuraSpec,
    LowerBound, MsmError, PruneConfig, Series, Stats, UpperBoundSource,
};
use thiserror::Error;

/// Sakoe-Chiba half-width, either in cells or as a fraction of the longer
/// series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Width {
    Cells(usize),
    Fraction(f64),
}

impl Width {
    fn band(self, len: usize, slanted: bool) -> BandSpec {
        match self {
            Width::Cells(b) => BandSpec { b, slanted },
            Width::Fraction(f) => BandSpec::relative(f, len, slanted),
        }
    }
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Width::Cells(b) => write!(f, "b={b}"),
            Width::Fraction(p) => write!(f, "b={}%", p * 100.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UbChoice {
    Greedy,
    Triangle,
    Sakoe(Width),
    Itakura(f64),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LbChoice {
    None,
    Ms,
    T,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrunedSpec {
    pub ub: UbChoice,
    pub update: bool,
    pub band: bool,
    pub lb: LbChoice,
}

impl Default for PrunedSpec {
    fn default() -> Self {
        Self {
            ub: UbChoice::Greedy,
            update: true,
            band: true,
            lb: LbChoice::Ms,
        }
    }
}

impl PrunedSpec {
    /// Every combination of upper bound, update, band and lower bound.
    pub fn matrix() -> Vec<PrunedSpec> {
        let ubs = [
            UbChoice::Greedy,
            UbChoice::Triangle,
            UbChoice::Sakoe(Width::Fraction(0.1)),
            UbChoice::Itakura(2.0 / 3.0),
            UbChoice::Infinite,
        ];
        let lbs = [LbChoice::None, LbChoice::Ms, LbChoice::T, LbChoice::Max];
        let mut out = Vec::new();
        for ub in ubs {
            for update in [false, true] {
                for band in [false, true] {
                    for lb in lbs {
                        out.push(PrunedSpec { ub, update, band, lb });
                    }
                }
            }
        }
        out
    }

    /// Concrete configuration for a pair whose longer series has `len` points.
    pub fn config(&self, len: usize, q: f64) -> Result<PruneConfig<f64>, MsmError> {
        let ub = match self.ub {
            UbChoice::Greedy => UpperBoundSource::Greedy,
            UbChoice::Triangle => UpperBoundSource::Triangle { q },
            UbChoice::Sakoe(w) => UpperBoundSource::Sakoe(w.band(len, true)),
            UbChoice::Itakura(d) => UpperBoundSource::Itakura(ItakuraSpec::new(d)?),
            UbChoice::Infinite => UpperBoundSource::Infinite,
        };
        let lb = match self.lb {
            LbChoice::None => LowerBound::None,
            LbChoice::Ms => LowerBound::Ms,
            LbChoice::T => LowerBound::Triangle { q },
            LbChoice::Max => LowerBound::MaxOfBoth { q },
        };
        Ok(PruneConfig::new(ub)
            .with_update(self.update)
            .with_band(self.band)
            .with_lower_bound(lb))
    }
}

impl fmt::Display for PrunedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ub {
            UbChoice::Greedy => write!(f, "ub=greedy")?,
            UbChoice::Triangle => write!(f, "ub=triangle")?,
            UbChoice::Sakoe(w) => write!(f, "ub=sakoe({w})")?,
            UbChoice::Itakura(d) => write!(f, "ub=itakura(d={d:.4})")?,
            UbChoice::Infinite => write!(f, "ub=inf")?,
        }
        if self.update {
            write!(f, " update")?;
        }
        if self.band {
            write!(f, " band")?;
        }
        let lb = match self.lb {
            LbChoice::None => "none",
            LbChoice::Ms => "ms",
            LbChoice::T => "t",
            LbChoice::Max => "max",
        };
        write!(f, " lb={lb}")
    }
}

/// One distance routine with its parameters fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algorithm {
    Classic,
    Improved,
    /// Distance of the first series to the constant `q`; the second series is
    /// ignored.
    Cmsm,
    Triangle,
    Greedy,
    Sakoe { width: Width, slanted: bool },
    Itakura { d: f64 },
    Pruned(PrunedSpec),
    Dtw(CostMode),
    PrunedDtw(CostMode),
}

/// Value and optional pruning statistics of one evaluation.
#[derive(Debug, Clone, Copy)]
pub struct Outcome {
    pub value: f64,
    pub stats: Option<Stats>,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Classic => "classic",
            Algorithm::Improved => "improved",
            Algorithm::Cmsm => "cmsm",
            Algorithm::Triangle => "triangle",
            Algorithm::Greedy => "greedy",
            Algorithm::Sakoe { .. } => "sakoe",
            Algorithm::Itakura { .. } => "itakura",
            Algorithm::Pruned(_) => "pruned",
            Algorithm::Dtw(_) => "dtw",
            Algorithm::PrunedDtw(_) => "pruned-dtw",
        }
    }

    /// Parameter string for reports; `c` and `q` are included where they
    /// affect the result.
    pub fn params(&self, c: f64, q: f64) -> String {
        match self {
            Algorithm::Classic | Algorithm::Improved | Algorithm::Greedy => format!("c={c}"),
            Algorithm::Cmsm | Algorithm::Triangle => format!("c={c} q={q}"),
            Algorithm::Sakoe { width, slanted } => {
                format!("c={c} {width}{}", if *slanted { " slanted" } else { "" })
            }
            Algorithm::Itakura { d } => format!("c={c} d={d:.4}"),
            Algorithm::Pruned(spec) => format!("c={c} q={q} {spec}"),
            Algorithm::Dtw(mode) | Algorithm::PrunedDtw(mode) => match mode {
                CostMode::Squared => "cost=squared".to_string(),
                CostMode::Absolute => "cost=absolute".to_string(),
            },
        }
    }

    /// Exact algorithms always reproduce their reference distance.
    pub fn is_exact(&self) -> bool {
        matches!(
            self,
            Algorithm::Classic
                | Algorithm::Improved
                | Algorithm::Cmsm
                | Algorithm::Pruned(_)
                | Algorithm::Dtw(_)
                | Algorithm::PrunedDtw(_)
        )
    }

    pub fn is_pruned(&self) -> bool {
        matches!(self, Algorithm::Pruned(_) | Algorithm::PrunedDtw(_))
    }

    pub fn run(&self, x: &Series, y: &Series, c: CostParam<f64>, q: f64) -> Result<Outcome, MsmError> {
        let len = x.len().max(y.len());
        let plain = |value: f64| Outcome { value, stats: None };
        Ok(match *self {
            Algorithm::Classic => plain(msm_classic(x, y, c).0.value()),
            Algorithm::Improved => plain(msm_improved(x, y, c).value()),
            Algorithm::Cmsm => plain(cmsm_distance(x, q, c).value()),
            Algorithm::Triangle => plain(triangle_heuristic(x, y, c, q)?.value.value()),
            Algorithm::Greedy => plain(greedy_heuristic(x, y, c).value.value()),
            Algorithm::Sakoe { width, slanted } => {
                plain(sakoe_chiba(x, y, c, width.band(len, slanted))?.value.value())
            }
            Algorithm::Itakura { d } => plain(itakura(x, y, c, ItakuraSpec::new(d)?)?.value.value()),
            Algorithm::Pruned(spec) => {
                let (d, stats) = pruned_msm(x, y, c, spec.config(len, q)?)?;
                Outcome {
                    value: d.value(),
                    stats: Some(stats),
                }
            }
            Algorithm::Dtw(mode) => plain(dtw_full(x, y, DtwConfig::new(mode, DtwUpperBound::Infinite)).value()),
            Algorithm::PrunedDtw(mode) => {
                let (d, stats) = pruned_dtw(x, y, DtwConfig::new(mode, DtwUpperBound::EuclideanPath));
                Outcome {
                    value: d.value(),
                    stats: Some(stats),
                }
            }
        })
    }

    /// The exact distance this algorithm approximates or reproduces.
    pub fn reference(&self, x: &Series, y: &Series, c: CostParam<f64>, q: f64) -> f64 {
        match *self {
            Algorithm::Cmsm => {
                let constant = Series::constant(q, x.len()).expect("non-empty");
                msm_classic(x, &constant, c).0.value()
            }
            Algorithm::Dtw(mode) | Algorithm::PrunedDtw(mode) => {
                dtw_full(x, y, DtwConfig::new(mode, DtwUpperBound::Infinite)).value()
            }
            _ => msm_classic(x, y, c).0.value(),
        }
    }

    /// Which reference a row is measured against; pairs sharing a key share
    /// the reference value.
    pub(crate) fn reference_key(&self) -> ReferenceKey {
        match self {
            Algorithm::Cmsm => ReferenceKey::Constant,
            Algorithm::Dtw(CostMode::Squared) | Algorithm::PrunedDtw(CostMode::Squared) => ReferenceKey::DtwSquared,
            Algorithm::Dtw(CostMode::Absolute) | Algorithm::PrunedDtw(CostMode::Absolute) => {
                ReferenceKey::DtwAbsolute
            }
            _ => ReferenceKey::Msm,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum ReferenceKey {
    Msm,
    Constant,
    DtwSquared,
    DtwAbsolute,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("unknown algorithm {token:?}: {reason}")]
pub struct AlgorithmParseError {
    pub token: String,
    pub reason: String,
}

/// Parses benchmark tokens:
///
/// `classic`, `improved`, `cmsm`, `triangle`, `greedy`,
/// `sakoe[:<frac>|:<cells>][:straight]` (default 10%, slanted),
/// `itakura[:<d>]` (default 2/3),
/// `pruned[:<ub>[+u][+b][+<lb>]]` with `ub` in `greedy|triangle|sakoe|itakura|inf`
/// and `lb` in `none|ms|t|max` (default `greedy+u+b+ms`),
/// `dtw[:abs]`, `pruned-dtw[:abs]`.
impl FromStr for Algorithm {
    type Err = AlgorithmParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let token = s.trim();
        let fail = |reason: &str| AlgorithmParseError {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = token.split(':');
        let head = parts.next().unwrap_or_default().to_ascii_lowercase();
        let args: Vec<&str> = parts.collect();
        let no_args = |alg: Algorithm| {
            if args.is_empty() {
                Ok(alg)
            } else {
                Err(fail("takes no parameters"))
            }
        };
        let cost_mode = || match args.as_slice() {
            [] => Ok(CostMode::Squared),
            ["abs"] | ["absolute"] => Ok(CostMode::Absolute),
            ["sq"] | ["squared"] => Ok(CostMode::Squared),
            _ => Err(fail("expected :abs or :squared")),
        };
        match head.as_str() {
            "classic" => no_args(Algorithm::Classic),
            "improved" => no_args(Algorithm::Improved),
            "cmsm" => no_args(Algorithm::Cmsm),
            "triangle" => no_args(Algorithm::Triangle),
            "greedy" => no_args(Algorithm::Greedy),
            "sakoe" => {
                let mut width = Width::Fraction(0.1);
                let mut slanted = true;
                for arg in &args {
                    if *arg == "straight" {
                        slanted = false;
                    } else {
                        width = parse_width(arg).ok_or_else(|| fail("width must be a fraction < 1 or a cell count"))?;
                    }
                }
                Ok(Algorithm::Sakoe { width, slanted })
            }
            "itakura" => {
                let d = match args.as_slice() {
                    [] => 2.0 / 3.0,
                    [v] => parse_fraction(v).ok_or_else(|| fail("d must be a number or a/b"))?,
                    _ => return Err(fail("expected itakura:<d>")),
                };
                ItakuraSpec::new(d).map_err(|e| fail(&e.to_string()))?;
                Ok(Algorithm::Itakura { d })
            }
            "pruned" => match args.as_slice() {
                [] => Ok(Algorithm::Pruned(PrunedSpec::default())),
                [spec] => parse_pruned(spec).map(Algorithm::Pruned).map_err(|r| fail(&r)),
                _ => Err(fail("expected pruned:<spec>")),
            },
            "dtw" => cost_mode().map(Algorithm::Dtw),
            "pruned-dtw" => cost_mode().map(Algorithm::PrunedDtw),
            _ => Err(fail("not a known algorithm")),
        }
    }
}

fn parse_fraction(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((a, b)) => Some(a.parse::<f64>().ok()? / b.parse::<f64>().ok()?),
        None => s.parse().ok(),
    }
}

fn parse_width(s: &str) -> Option<Width> {
    if let Some(p) = s.strip_suffix('%') {
        return Some(Width::Fraction(p.parse::<f64>().ok()? / 100.0));
    }
    if let Ok(cells) = s.parse::<usize>() {
        return Some(Width::Cells(cells));
    }
    let f: f64 = s.parse().ok()?;
    (0.0..1.0).contains(&f).then_some(Width::Fraction(f))
}

fn parse_pruned(spec: &str) -> Result<PrunedSpec, String> {
    let mut parts = spec.split('+');
    let ub = match parts.next().unwrap_or_default() {
        "greedy" => UbChoice::Greedy,
        "triangle" => UbChoice::Triangle,
        "sakoe" => UbChoice::Sakoe(Width::Fraction(0.1)),
        "itakura" => UbChoice::Itakura(2.0 / 3.0),
        "inf" => UbChoice::Infinite,
        other => return Err(format!("unknown upper bound {other:?}")),
    };
    let mut out = PrunedSpec {
        ub,
        update: false,
        band: false,
        lb: LbChoice::None,
    };
    for flag in parts {
        match flag {
            "u" => out.update = true,
            "b" => out.band = true,
            "none" => out.lb = LbChoice::None,
            "ms" => out.lb = LbChoice::Ms,
            "t" => out.lb = LbChoice::T,
            "max" => out.lb = LbChoice::Max,
            other => return Err(format!("unknown flag {other:?}")),
        }
    }
    Ok(out)
}
