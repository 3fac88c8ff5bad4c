//! Distance metrics between probability time series, selectable by name.
//!
//! A metric turns the two per-reference-node norms of one combination
//! `(i, j, k, l)` into its contribution `D_ijkl`. The norm itself is taken
//! over the time index (l2 by default, l1 optionally) after the metric's
//! [`prepare`](DistanceMetric::prepare) transform has been applied to every
//! series once.
//!
//! | name                | contribution                                   |
//! |---------------------|------------------------------------------------|
//! | `threshold`         | `0` if `a + b < epsilon`, else `1`             |
//! | `euclidean`         | `(a + b) / T`                                  |
//! | `euclidean_squared` | `(a / T)^2 + (b / T)^2`                        |
//! | `matusita`          | `(a + b) / T` on square-rooted series          |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MetricError {
    #[error("unknown metric {0:?}")]
    Unknown(String),
    #[error("epsilon must be positive and finite, got {0}")]
    BadEpsilon(f64),
    #[error("series lengths differ: {0:?}")]
    LengthMismatch([usize; 4]),
    #[error("unknown accumulation {0:?} (expected l2 or l1)")]
    UnknownAccumulation(String),
}

/// Norm over the time index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Accumulation {
    #[default]
    L2,
    L1,
}

impl Accumulation {
    #[inline]
    pub fn distance(self, x: &[f64], y: &[f64]) -> f64 {
        match self {
            Accumulation::L2 => x
                .iter()
                .zip(y)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt(),
            Accumulation::L1 => x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum(),
        }
    }
}

impl FromStr for Accumulation {
    type Err = MetricError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "l2" => Ok(Accumulation::L2),
            "l1" => Ok(Accumulation::L1),
            _ => Err(MetricError::UnknownAccumulation(s.to_string())),
        }
    }
}

impl fmt::Display for Accumulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Accumulation::L2 => "l2",
            Accumulation::L1 => "l1",
        })
    }
}

pub const DEFAULT_EPSILON: f64 = 0.01;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricConfig {
    /// Canonical registry name of the metric.
    pub kind: String,
    /// Only read by `threshold`.
    pub epsilon: f64,
    pub accumulation: Accumulation,
}

impl MetricConfig {
    /// Config for `name` (aliases accepted) with default epsilon and l2.
    pub fn named(name: &str) -> Result<Self, MetricError> {
        let kind = registry().canonical(name)?.to_string();
        Ok(MetricConfig {
            kind,
            epsilon: DEFAULT_EPSILON,
            accumulation: Accumulation::L2,
        })
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_accumulation(mut self, accumulation: Accumulation) -> Self {
        self.accumulation = accumulation;
        self
    }

    pub fn build(&self) -> Result<Arc<dyn DistanceMetric>, MetricError> {
        registry().create(self)
    }
}

impl Default for MetricConfig {
    fn default() -> Self {
        MetricConfig::named("euclidean").expect("builtin metric")
    }
}

pub trait DistanceMetric: Send + Sync + fmt::Debug {
    fn name(&self) -> &'static str;

    fn accumulation(&self) -> Accumulation;

    /// In-place transform applied to each series before norms are taken.
    fn prepare(&self, _series: &mut [f64]) {}

    /// Contribution of one combination from its two per-pair norms.
    fn combine(&self, first: f64, second: f64, n_steps: usize) -> f64;

    /// Contributions are 0/1 counts.
    fn is_count(&self) -> bool {
        false
    }

    /// `D_ijkl` for series already passed through [`prepare`](Self::prepare).
    #[inline]
    fn combination(&self, si: &[f64], sk: &[f64], sj: &[f64], sl: &[f64]) -> f64 {
        let acc = self.accumulation();
        self.combine(acc.distance(si, sk), acc.distance(sj, sl), si.len())
    }
}

#[derive(Debug)]
pub struct Threshold {
    pub epsilon: f64,
    pub accumulation: Accumulation,
}

impl DistanceMetric for Threshold {
    fn name(&self) -> &'static str {
        "threshold"
    }
    fn accumulation(&self) -> Accumulation {
        self.accumulation
    }
    fn combine(&self, first: f64, second: f64, _n_steps: usize) -> f64 {
        if first + second < self.epsilon {
            0.0
        } else {
            1.0
        }
    }
    fn is_count(&self) -> bool {
        true
    }
}

#[derive(Debug)]
pub struct Euclidean {
    pub accumulation: Accumulation,
}

impl DistanceMetric for Euclidean {
    fn name(&self) -> &'static str {
        "euclidean"
    }
    fn accumulation(&self) -> Accumulation {
        self.accumulation
    }
    fn combine(&self, first: f64, second: f64, n_steps: usize) -> f64 {
        (first + second) / n_steps as f64
    }
}

#[derive(Debug)]
pub struct EuclideanSquared {
    pub accumulation: Accumulation,
}

impl DistanceMetric for EuclideanSquared {
    fn name(&self) -> &'static str {
        "euclidean_squared"
    }
    fn accumulation(&self) -> Accumulation {
        self.accumulation
    }
    fn combine(&self, first: f64, second: f64, n_steps: usize) -> f64 {
        let t = n_steps as f64;
        (first / t).powi(2) + (second / t).powi(2)
    }
}

#[derive(Debug)]
pub struct Matusita {
    pub accumulation: Accumulation,
}

impl DistanceMetric for Matusita {
    fn name(&self) -> &'static str {
        "matusita"
    }
    fn accumulation(&self) -> Accumulation {
        self.accumulation
    }
    fn prepare(&self, series: &mut [f64]) {
        // Probabilities can come out a few ulps below zero.
        for p in series {
            *p = p.max(0.0).sqrt();
        }
    }
    fn combine(&self, first: f64, second: f64, n_steps: usize) -> f64 {
        (first + second) / n_steps as f64
    }
}

pub type MetricFactory = fn(&MetricConfig) -> Result<Arc<dyn DistanceMetric>, MetricError>;

struct Entry {
    factory: MetricFactory,
    aliases: Vec<&'static str>,
}

/// Name-keyed metric factories. Aliases resolve to one canonical name.
pub struct MetricRegistry {
    entries: BTreeMap<&'static str, Entry>,
}

impl MetricRegistry {
    pub fn empty() -> Self {
        MetricRegistry {
            entries: BTreeMap::new(),
        }
    }

    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register("threshold", &["thresh", "eps"], |c| {
            if !(c.epsilon > 0.0 && c.epsilon.is_finite()) {
                return Err(MetricError::BadEpsilon(c.epsilon));
            }
            Ok(Arc::new(Threshold {
                epsilon: c.epsilon,
                accumulation: c.accumulation,
            }))
        });
        r.register("euclidean", &["euclid"], |c| {
            Ok(Arc::new(Euclidean {
                accumulation: c.accumulation,
            }))
        });
        r.register("euclidean_squared", &["euclid2", "euclidean2"], |c| {
            Ok(Arc::new(EuclideanSquared {
                accumulation: c.accumulation,
            }))
        });
        r.register("matusita", &[], |c| {
            Ok(Arc::new(Matusita {
                accumulation: c.accumulation,
            }))
        });
        r
    }

    pub fn register(
        &mut self,
        name: &'static str,
        aliases: &[&'static str],
        factory: MetricFactory,
    ) {
        self.entries.insert(
            name,
            Entry {
                factory,
                aliases: aliases.to_vec(),
            },
        );
    }

    /// Canonical name for `name` or one of its aliases.
    pub fn canonical(&self, name: &str) -> Result<&'static str, MetricError> {
        let wanted = name.trim().to_ascii_lowercase();
        self.entries
            .iter()
            .find(|(k, e)| **k == wanted || e.aliases.iter().any(|a| *a == wanted))
            .map(|(k, _)| *k)
            .ok_or_else(|| MetricError::Unknown(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn create(&self, cfg: &MetricConfig) -> Result<Arc<dyn DistanceMetric>, MetricError> {
        let name = self.canonical(&cfg.kind)?;
        (self.entries[name].factory)(cfg)
    }
}

/// Process-wide registry holding the builtin metrics.
pub fn registry() -> &'static MetricRegistry {
    static REGISTRY: OnceLock<MetricRegistry> = OnceLock::new();
    REGISTRY.get_or_init(MetricRegistry::with_builtins)
}

/// `D_ijkl` from raw probability series: `si` vs `sk` and `sj` vs `sl`.
pub fn pair_distance(
    si: &[f64],
    sj: &[f64],
    sk: &[f64],
    sl: &[f64],
    cfg: &MetricConfig,
) -> Result<f64, MetricError> {
    let lens = [si.len(), sj.len(), sk.len(), sl.len()];
    if lens.iter().any(|&l| l != lens[0]) {
        return Err(MetricError::LengthMismatch(lens));
    }
    let metric = cfg.build()?;
    let prep = |s: &[f64]| {
        let mut v = s.to_vec();
        metric.prepare(&mut v);
        v
    };
    Ok(metric.combination(&prep(si), &prep(sk), &prep(sj), &prep(sl)))
}
