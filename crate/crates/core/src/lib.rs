//! Graph similarity from discrete-time coined quantum walks.
//!
//! Two reference vertices per graph carry fixed phase marks; the probability
//! time series they produce are compared across every combination of
//! reference pairs to give a comparison score, and three such scores (each
//! graph against a relabelled copy of itself, and the two graphs against
//! each other) give a similarity in `(0, 1]`.
//!
//! ```
//! use qwgsim_core::{builtin_graph, graph_similarity, CompareConfig};
//!
//! let a = builtin_graph("k33").unwrap();
//! let b = builtin_graph("octahedron").unwrap();
//! let report = graph_similarity(&a, &b, &CompareConfig::default()).unwrap();
//! assert!(report.sim < 1.0);
//! ```

pub mod baselines;
pub mod comparison;
pub mod graph;
pub mod metrics;
pub mod rng;
pub mod similarity;
pub mod walk;

pub use comparison::{
    comparison_score, steps_policy, CompareConfig, CompareError, ComparisonScore, Enumeration,
    StepPolicy,
};
pub use graph::{builtin_graph, Graph, GraphError, Permutation, SrgParams};
pub use metrics::{Accumulation, DistanceMetric, MetricConfig, MetricError};
pub use similarity::{graph_similarity, SimilarityReport};
pub use walk::{run_walk, ArcSpace, PhaseMarks, ProbabilitySeries, WalkState};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Compare(#[from] CompareError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Walk(#[from] walk::WalkError),
    #[error(transparent)]
    Baseline(#[from] baselines::BaselineError),
}
