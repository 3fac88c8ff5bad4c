//! Similarity from three comparison scores.
//!
//! `a'` and `b'` are seeded random relabellings of the inputs. With
//! `D_aa = score(a, a')`, `D_bb = score(b, b')` and `D_ab = score(a, b)`, all
//! sharing one step count,
//!
//! ```text
//! dist = |D_aa - D_ab| / D_aa + |D_bb - D_ab| / D_bb
//! sim  = 1 / (1 + dist)
//! ```
//!
//! A term whose self-score is zero contributes 0 when `D_ab` is zero too;
//! otherwise `dist` becomes [`DEGENERATE_DISTANCE`].

use serde::{Deserialize, Serialize};

use crate::comparison::{
    comparison_score_with, CompareConfig, CompareError, ComparisonScore, Enumeration,
};
use crate::graph::{Graph, Permutation};
use crate::metrics::{Accumulation, MetricConfig};

/// Distance assigned when a graph's self-score is zero but the cross score is
/// not; gives `sim` of about `1e-18`.
pub const DEGENERATE_DISTANCE: f64 = 1e18;

/// Stream ids for the two relabellings drawn from `CompareConfig::seed`.
const STREAM_PERM_A: u64 = 1;
const STREAM_PERM_B: u64 = 2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub theta: f64,
    pub phi: f64,
    pub metric: String,
    pub epsilon: f64,
    pub accumulation: Accumulation,
    pub n_steps: usize,
    pub mode: Enumeration,
    pub seed: u64,
    pub perm_a: Permutation,
    pub perm_b: Permutation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimilarityReport {
    pub d_aa: ComparisonScore,
    pub d_bb: ComparisonScore,
    pub d_ab: ComparisonScore,
    pub dist: f64,
    pub sim: f64,
    pub config: ReportConfig,
}

pub fn graph_similarity(
    a: &Graph,
    b: &Graph,
    cfg: &CompareConfig,
) -> Result<SimilarityReport, CompareError> {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return Err(CompareError::SizeMismatch(n, b.vertex_count()));
    }
    cfg.validate()?;
    let metric = cfg.metric.build()?;
    let n_steps = cfg.resolve_steps(a, b);

    let perm_a = Permutation::random(n, cfg.seed, STREAM_PERM_A);
    let perm_b = Permutation::random(n, cfg.seed, STREAM_PERM_B);
    let a_copy = a.permute(&perm_a).expect("permutation has matching length");
    let b_copy = b.permute(&perm_b).expect("permutation has matching length");

    let score = |x: &Graph, y: &Graph| comparison_score_with(x, y, cfg, metric.as_ref(), n_steps);
    let ((d_aa, d_bb), d_ab) = rayon::join(
        || rayon::join(|| score(a, &a_copy), || score(b, &b_copy)),
        || score(a, b),
    );
    let (d_aa, d_bb, d_ab) = (d_aa?, d_bb?, d_ab?);

    let dist = normalised_distance(d_aa.value, d_bb.value, d_ab.value);
    Ok(SimilarityReport {
        d_aa,
        d_bb,
        d_ab,
        dist,
        sim: 1.0 / (1.0 + dist),
        config: ReportConfig {
            theta: cfg.theta,
            phi: cfg.phi,
            metric: metric.name().to_string(),
            epsilon: cfg.metric.epsilon,
            accumulation: cfg.metric.accumulation,
            n_steps,
            mode: cfg.enumeration,
            seed: cfg.seed,
            perm_a,
            perm_b,
        },
    })
}

/// Sum of the relative deviations of `d_ab` from each self-score.
pub fn normalised_distance(d_aa: f64, d_bb: f64, d_ab: f64) -> f64 {
    let term = |own: f64| {
        if own == 0.0 {
            if d_ab == 0.0 {
                Some(0.0)
            } else {
                None
            }
        } else {
            Some((own - d_ab).abs() / own)
        }
    };
    match (term(d_aa), term(d_bb)) {
        (Some(x), Some(y)) => x + y,
        _ => DEGENERATE_DISTANCE,
    }
}

/// Similarity under every builtin metric, in registry order.
pub fn similarity_all_metrics(
    a: &Graph,
    b: &Graph,
    base: &CompareConfig,
) -> Result<Vec<SimilarityReport>, CompareError> {
    crate::metrics::registry()
        .names()
        .map(|name| {
            let metric = MetricConfig {
                kind: name.to_string(),
                ..base.metric.clone()
            };
            graph_similarity(a, b, &base.clone().with_metric(metric))
        })
        .collect()
}
