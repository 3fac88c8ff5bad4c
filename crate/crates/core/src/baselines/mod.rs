//! Classical reference measures, selectable by name: `deltacon` (similarity
//! of identically-labelled graphs) and `mcs` (maximum-common-subgraph
//! distance, exact search on small graphs).

mod deltacon;
mod mcs;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use deltacon::{deltacon_affinity, deltacon_similarity, AffinityMatrix, DeltaCon};
pub use mcs::{max_common_induced_subgraph, mcs_distance, Mcs, MCS_MAX_VERTICES};

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum BaselineError {
    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("exhaustive search is limited to {limit} vertices, got {got}")]
    TooLarge { limit: usize, got: usize },
    #[error("affinity matrix is singular")]
    Singular,
    #[error("unknown baseline {0:?}")]
    Unknown(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// 1 means identical.
    Similarity,
    /// 0 means identical.
    Distance,
}

pub trait Baseline: Send + Sync {
    fn name(&self) -> &'static str;
    fn orientation(&self) -> Orientation;
    fn evaluate(&self, a: &Graph, b: &Graph) -> Result<f64, BaselineError>;
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaselineResult {
    pub metric: String,
    pub value: f64,
}

#[derive(Default)]
pub struct BaselineRegistry {
    entries: BTreeMap<&'static str, Arc<dyn Baseline>>,
}

impl BaselineRegistry {
    pub fn with_builtins() -> Self {
        let mut r = Self::default();
        r.register(Arc::new(DeltaCon));
        r.register(Arc::new(Mcs));
        r
    }

    pub fn register(&mut self, baseline: Arc<dyn Baseline>) {
        self.entries.insert(baseline.name(), baseline);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Baseline>, BaselineError> {
        self.entries
            .get(name.trim().to_ascii_lowercase().as_str())
            .cloned()
            .ok_or_else(|| BaselineError::Unknown(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn run(&self, name: &str, a: &Graph, b: &Graph) -> Result<BaselineResult, BaselineError> {
        let baseline = self.get(name)?;
        Ok(BaselineResult {
            metric: baseline.name().to_string(),
            value: baseline.evaluate(a, b)?,
        })
    }
}

pub fn registry() -> &'static BaselineRegistry {
    static REGISTRY: OnceLock<BaselineRegistry> = OnceLock::new();
    REGISTRY.get_or_init(BaselineRegistry::with_builtins)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        let r = registry();
        assert_eq!(r.names().collect::<Vec<_>>(), vec!["deltacon", "mcs"]);
        assert_eq!(r.get("MCS").unwrap().orientation(), Orientation::Distance);
        assert!(matches!(r.get("ged"), Err(BaselineError::Unknown(_))));
        let res = r.run("deltacon", &Graph::path(3), &Graph::path(3)).unwrap();
        assert_eq!(
            res,
            BaselineResult {
                metric: "deltacon".into(),
                value: 1.0
            }
        );
    }
}
