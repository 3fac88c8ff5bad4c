//! Comparison score between two equal-order graphs.
//!
//! Every combination of reference pairs `(i, j)` on `a` and `(k, l)` on `b`
//! contributes `D_ijkl`, built from `P(i)` vs `P(k)` and `P(j)` vs `P(l)`,
//! where each graph's walk carries `theta` on its first reference vertex and
//! `phi` on its second. A walk depends only on its own graph and mark pair,
//! so each side runs one walk per mark pair and caches the two recorded
//! series; the combination sum then reads from those caches.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::metrics::{DistanceMetric, MetricConfig, MetricError};
use crate::walk::{ArcSpace, PhaseMarks, WalkError, Walker};

#[derive(Debug, Error, PartialEq)]
pub enum CompareError {
    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("comparison needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// Which reference-node combinations are summed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Enumeration {
    /// `i < j` on the first graph, all ordered `(k, l)` including `k = l` on
    /// the second: `n^3 (n - 1) / 2` combinations.
    #[default]
    Paper,
    /// Ordered `i != j` and `k != l`: `n^2 (n - 1)^2` combinations. The sum is
    /// symmetric in its two graphs.
    Symmetric,
}

impl Enumeration {
    pub fn combo_count(self, n: usize) -> u64 {
        let n = n as u64;
        match self {
            Enumeration::Paper => n * n * n * n.saturating_sub(1) / 2,
            Enumeration::Symmetric => n * n * n.saturating_sub(1) * n.saturating_sub(1),
        }
    }

    fn first_pairs(self, n: usize) -> Vec<(usize, usize)> {
        match self {
            Enumeration::Paper => (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect(),
            Enumeration::Symmetric => ordered_distinct(n),
        }
    }

    fn second_pairs(self, n: usize) -> Vec<(usize, usize)> {
        match self {
            Enumeration::Paper => (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).collect(),
            Enumeration::Symmetric => ordered_distinct(n),
        }
    }
}

fn ordered_distinct(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect()
}

impl FromStr for Enumeration {
    type Err = CompareError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(Enumeration::Paper),
            "symmetric" => Ok(Enumeration::Symmetric),
            _ => Err(CompareError::InvalidConfig(format!(
                "unknown enumeration mode {s:?} (expected paper or symmetric)"
            ))),
        }
    }
}

impl fmt::Display for Enumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Enumeration::Paper => "paper",
            Enumeration::Symmetric => "symmetric",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepPolicy {
    /// Twice the larger diameter, at least 4.
    #[default]
    Auto,
    #[serde(untagged)]
    Fixed(usize),
}

impl FromStr for StepPolicy {
    type Err = CompareError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(StepPolicy::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(StepPolicy::Fixed(n)),
            _ => Err(CompareError::InvalidConfig(format!(
                "steps must be `auto` or a positive integer, got {s:?}"
            ))),
        }
    }
}

/// Default phases satisfy `theta + phi = 2 pi`. The coin, shift and initial
/// state are real, so conjugating a walk negates both phases; with this sum,
/// swapping the phases between the two reference vertices leaves every
/// probability unchanged, and the `i < j` enumeration of the first graph does
/// not depend on the labelling. A vertex carrying both phases is unmarked.
pub const DEFAULT_THETA: f64 = PI / 2.0;
pub const DEFAULT_PHI: f64 = 3.0 * PI / 2.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompareConfig {
    pub theta: f64,
    pub phi: f64,
    pub steps: StepPolicy,
    pub enumeration: Enumeration,
    pub metric: MetricConfig,
    /// Seeds the isomorphic copies drawn by the similarity computation.
    pub seed: u64,
}

impl Default for CompareConfig {
    fn default() -> Self {
        CompareConfig {
            theta: DEFAULT_THETA,
            phi: DEFAULT_PHI,
            steps: StepPolicy::Auto,
            enumeration: Enumeration::Paper,
            metric: MetricConfig::default(),
            seed: 0,
        }
    }
}

impl CompareConfig {
    pub fn with_metric(mut self, metric: MetricConfig) -> Self {
        self.metric = metric;
        self
    }

    pub fn with_enumeration(mut self, enumeration: Enumeration) -> Self {
        self.enumeration = enumeration;
        self
    }

    pub fn with_steps(mut self, steps: StepPolicy) -> Self {
        self.steps = steps;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_phases(mut self, theta: f64, phi: f64) -> Self {
        self.theta = theta;
        self.phi = phi;
        self
    }

    pub fn validate(&self) -> Result<(), CompareError> {
        PhaseMarks::pair(0, self.theta, 1, self.phi)?;
        if self.steps == StepPolicy::Fixed(0) {
            return Err(WalkError::ZeroSteps.into());
        }
        self.metric.build()?;
        Ok(())
    }

    /// Step count for comparing `a` with `b` under this config.
    pub fn resolve_steps(&self, a: &Graph, b: &Graph) -> usize {
        match self.steps {
            StepPolicy::Auto => steps_policy(a, b),
            StepPolicy::Fixed(n) => n,
        }
    }
}

/// `max(2 diam(a), 2 diam(b), 4)`.
pub fn steps_policy(a: &Graph, b: &Graph) -> usize {
    (2 * a.diameter()).max(2 * b.diameter()).max(4)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonScore {
    pub value: f64,
    pub combo_count: u64,
    pub n_steps: usize,
}

/// Prepared reference series of every walk on one side, `2 * n_steps` values
/// per walk: first reference vertex, then second.
struct SeriesBank {
    n_steps: usize,
    data: Vec<f64>,
}

impl SeriesBank {
    fn build(
        g: &Graph,
        pairs: &[(usize, usize)],
        theta: f64,
        phi: f64,
        n_steps: usize,
        metric: &dyn DistanceMetric,
    ) -> Result<Self, CompareError> {
        let space = ArcSpace::new(g);
        let chunks: Vec<Vec<f64>> = pairs
            .par_iter()
            .map(|&(first, second)| {
                let marks = PhaseMarks::pair(first, theta, second, phi)?;
                let mut walker = Walker::new(&space, &marks)?;
                let mut out = vec![0.0; 2 * n_steps];
                for t in 0..n_steps {
                    walker.step();
                    out[t] = walker.probability_at(first);
                    out[n_steps + t] = walker.probability_at(second);
                }
                metric.prepare(&mut out[..n_steps]);
                metric.prepare(&mut out[n_steps..]);
                Ok(out)
            })
            .collect::<Result<_, CompareError>>()?;
        Ok(SeriesBank {
            n_steps,
            data: chunks.concat(),
        })
    }

    #[inline]
    fn walk(&self, w: usize) -> (&[f64], &[f64]) {
        let t = self.n_steps;
        let base = 2 * t * w;
        (
            &self.data[base..base + t],
            &self.data[base + t..base + 2 * t],
        )
    }

    fn len(&self) -> usize {
        self.data.len() / (2 * self.n_steps)
    }
}

/// Comparison score with the step count resolved from `cfg`.
pub fn comparison_score(
    a: &Graph,
    b: &Graph,
    cfg: &CompareConfig,
) -> Result<ComparisonScore, CompareError> {
    cfg.validate()?;
    let metric = cfg.metric.build()?;
    let n_steps = cfg.resolve_steps(a, b);
    comparison_score_with(a, b, cfg, metric.as_ref(), n_steps)
}

/// Comparison score with an explicit metric instance and step count.
pub fn comparison_score_with(
    a: &Graph,
    b: &Graph,
    cfg: &CompareConfig,
    metric: &dyn DistanceMetric,
    n_steps: usize,
) -> Result<ComparisonScore, CompareError> {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return Err(CompareError::SizeMismatch(n, b.vertex_count()));
    }
    if n < 2 {
        return Err(CompareError::TooSmall(n));
    }
    if n_steps == 0 {
        return Err(WalkError::ZeroSteps.into());
    }
    let mode = cfg.enumeration;
    let first_pairs = mode.first_pairs(n);
    let second_pairs = mode.second_pairs(n);
    let first = SeriesBank::build(a, &first_pairs, cfg.theta, cfg.phi, n_steps, metric)?;
    let second = SeriesBank::build(b, &second_pairs, cfg.theta, cfg.phi, n_steps, metric)?;

    // One partial sum per first-side walk, each accumulated in canonical
    // order, then reduced in order: schedule-independent.
    let partials: Vec<f64> = (0..first.len())
        .into_par_iter()
        .map(|wa| {
            let (si, sj) = first.walk(wa);
            (0..second.len())
                .map(|wb| {
                    let (sk, sl) = second.walk(wb);
                    metric.combination(si, sk, sj, sl)
                })
                .sum::<f64>()
        })
        .collect();
    let value = partials.iter().sum();
    Ok(ComparisonScore {
        value,
        combo_count: mode.combo_count(n),
        n_steps,
    })
}
