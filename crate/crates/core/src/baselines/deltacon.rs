use log::warn;
use nalgebra::DMatrix;

use super::{Baseline, BaselineError, Orientation};
use crate::graph::Graph;

/// Node affinities `S = (I + eps^2 D - eps A)^-1` with `eps = 1 / (1 + max deg)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffinityMatrix {
    pub epsilon: f64,
    pub values: DMatrix<f64>,
}

impl AffinityMatrix {
    /// `max |(I + eps^2 D - eps A) S - I|`.
    pub fn residual(&self, g: &Graph) -> f64 {
        let n = g.vertex_count();
        let product = system_matrix(g, self.epsilon) * &self.values;
        (product - DMatrix::<f64>::identity(n, n)).amax()
    }
}

fn system_matrix(g: &Graph, epsilon: f64) -> DMatrix<f64> {
    let n = g.vertex_count();
    let mut m = DMatrix::<f64>::identity(n, n);
    for v in 0..n {
        m[(v, v)] += epsilon * epsilon * g.degree(v) as f64;
    }
    for &(u, v) in g.edges() {
        m[(u, v)] -= epsilon;
        if u != v {
            m[(v, u)] -= epsilon;
        }
    }
    m
}

pub fn deltacon_affinity(g: &Graph) -> Result<AffinityMatrix, BaselineError> {
    let epsilon = 1.0 / (1.0 + g.max_degree() as f64);
    let values = system_matrix(g, epsilon)
        .lu()
        .try_inverse()
        .ok_or(BaselineError::Singular)?;
    Ok(AffinityMatrix { epsilon, values })
}

/// `1 / (1 + d)` with `d` the Matusita distance between the two affinity
/// matrices. Assumes vertex `v` of `a` corresponds to vertex `v` of `b`.
pub fn deltacon_similarity(a: &Graph, b: &Graph) -> Result<f64, BaselineError> {
    if a.vertex_count() != b.vertex_count() {
        return Err(BaselineError::SizeMismatch(
            a.vertex_count(),
            b.vertex_count(),
        ));
    }
    let sa = deltacon_affinity(a)?;
    let sb = deltacon_affinity(b)?;
    let root = |x: f64| {
        if x < 0.0 {
            warn!("negative affinity {x:e} clamped to 0");
            0.0
        } else {
            x.sqrt()
        }
    };
    let d = sa
        .values
        .iter()
        .zip(sb.values.iter())
        .map(|(&x, &y)| (root(x) - root(y)).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok(1.0 / (1.0 + d))
}

pub struct DeltaCon;

impl Baseline for DeltaCon {
    fn name(&self) -> &'static str {
        "deltacon"
    }
    fn orientation(&self) -> Orientation {
        Orientation::Similarity
    }
    fn evaluate(&self, a: &Graph, b: &Graph) -> Result<f64, BaselineError> {
        deltacon_similarity(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_er, gen_scale_free};

    #[test]
    fn empty_graph_is_identity() {
        let s = deltacon_affinity(&Graph::empty(4)).unwrap();
        assert_eq!(s.epsilon, 1.0);
        assert_eq!(s.values, DMatrix::identity(4, 4));
    }

    #[test]
    fn epsilon_from_max_degree() {
        assert_eq!(deltacon_affinity(&Graph::star(3)).unwrap().epsilon, 0.25);
    }

    #[test]
    fn k2_matches_hand_inversion() {
        // [[1.25, -0.5], [-0.5, 1.25]]^-1 = [[1.25, 0.5], [0.5, 1.25]] / 1.3125
        let s = deltacon_affinity(&Graph::complete(2)).unwrap();
        let diag = 1.25 / 1.3125;
        let off = 0.5 / 1.3125;
        assert!((s.values[(0, 0)] - diag).abs() < 1e-12);
        assert!((s.values[(0, 1)] - off).abs() < 1e-12);
        assert!((s.values[(0, 0)] - 0.95238).abs() < 1e-5);
        assert!((s.values[(1, 0)] - 0.38095).abs() < 1e-5);
    }

    #[test]
    fn k2_vs_empty() {
        let sim = deltacon_similarity(&Graph::complete(2), &Graph::empty(2)).unwrap();
        let diag = 1.25f64 / 1.3125;
        let off = 0.5f64 / 1.3125;
        let d = (2.0 * (diag.sqrt() - 1.0).powi(2) + 2.0 * off).sqrt();
        assert!((sim - 1.0 / (1.0 + d)).abs() < 1e-12);
        assert!((sim - 0.5338).abs() < 1e-3);
    }

    #[test]
    fn residuals_and_symmetry() {
        for g in [
            gen_er(25, 0.2, 1).unwrap(),
            gen_scale_free(30, 3, 2).unwrap(),
        ] {
            let s = deltacon_affinity(&g).unwrap();
            assert!(s.residual(&g) <= 1e-10);
        }
        let a = gen_er(12, 0.3, 5).unwrap();
        let b = gen_er(12, 0.3, 6).unwrap();
        assert_eq!(deltacon_similarity(&a, &b), deltacon_similarity(&b, &a));
        assert_eq!(deltacon_similarity(&a, &a).unwrap(), 1.0);
        assert!(deltacon_similarity(&a, &Graph::empty(3)).is_err());
    }
}
