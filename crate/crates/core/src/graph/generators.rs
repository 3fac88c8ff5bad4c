use rand::seq::index;
use rand::Rng;

use super::{Graph, GraphError};
use crate::rng;

/// Erdős–Rényi `G(n, p)`: each pair `u < v` is joined independently with
/// probability `p`.
pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = rng::stream(seed, 0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unique(n, edges))
}

/// Preferential attachment grown from a complete `K_m` seed. Each new vertex
/// picks `m` distinct existing vertices, sequentially and without
/// replacement, each draw weighted by current degree. Yields exactly
/// `C(m, 2) + m (n - m)` edges.
pub fn gen_scale_free(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    if m == 0 || n < m {
        return Err(GraphError::InvalidParameter(format!(
            "scale-free model needs n >= m >= 1 (n = {n}, m = {m})"
        )));
    }
    let mut rng = rng::stream(seed, 0);
    let mut edges: Vec<(usize, usize)> = (0..m)
        .flat_map(|u| ((u + 1)..m).map(move |v| (u, v)))
        .collect();
    let mut degree = vec![0usize; n];
    for d in degree.iter_mut().take(m) {
        *d = m - 1;
    }
    let mut chosen = Vec::with_capacity(m);
    let mut taken = vec![false; n];
    for new in m..n {
        chosen.clear();
        for _ in 0..m {
            let total: usize = (0..new).filter(|&v| !taken[v]).map(|v| degree[v]).sum();
            let pick = if total == 0 {
                // Only reachable from the edgeless K_1 seed.
                let free: Vec<usize> = (0..new).filter(|&v| !taken[v]).collect();
                free[rng.gen_range(0..free.len())]
            } else {
                let mut target = rng.gen_range(0..total);
                let mut pick = usize::MAX;
                for v in (0..new).filter(|&v| !taken[v]) {
                    if target < degree[v] {
                        pick = v;
                        break;
                    }
                    target -= degree[v];
                }
                pick
            };
            taken[pick] = true;
            chosen.push(pick);
        }
        for &v in &chosen {
            taken[v] = false;
            degree[v] += 1;
            edges.push((v, new));
        }
        degree[new] = m;
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unique(n, edges))
}

/// `R(n, e)`: exactly `e` distinct pairs drawn uniformly from all `C(n, 2)`.
pub fn gen_uniform(n: usize, e: usize, seed: u64) -> Result<Graph, GraphError> {
    let pairs = n * n.saturating_sub(1) / 2;
    if e > pairs {
        return Err(GraphError::InvalidParameter(format!(
            "{e} edges requested but only {pairs} pairs exist on {n} vertices"
        )));
    }
    let mut rng = rng::stream(seed, 0);
    let mut picked = index::sample(&mut rng, pairs, e).into_vec();
    picked.sort_unstable();
    let edges = picked.into_iter().map(|idx| unrank_pair(n, idx)).collect();
    Ok(Graph::from_sorted_unique(n, edges))
}

/// Maps `0..C(n,2)` onto pairs `u < v` in lexicographic order.
fn unrank_pair(n: usize, mut idx: usize) -> (usize, usize) {
    let mut u = 0;
    loop {
        let row = n - 1 - u;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
        u += 1;
    }
}

/// Removes `count` edges chosen uniformly without replacement.
pub fn remove_random_edges(g: &Graph, count: usize, seed: u64) -> Result<Graph, GraphError> {
    if count > g.edge_count() {
        return Err(GraphError::InvalidParameter(format!(
            "cannot remove {count} edges from a graph with {}",
            g.edge_count()
        )));
    }
    let mut rng = rng::stream(seed, 0);
    let drop = index::sample(&mut rng, g.edge_count(), count).into_vec();
    Ok(g.without_edges(&drop))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        assert_eq!(gen_er(10, 0.0, 3).unwrap().edge_count(), 0);
        assert_eq!(gen_er(10, 1.0, 3).unwrap(), Graph::complete(10));
        assert!(gen_er(10, 1.5, 3).is_err());
        assert!(gen_er(10, -0.1, 3).is_err());
    }

    #[test]
    fn er_mean_edge_count() {
        // Binomial(190, 0.3) has mean 57 and sd ~6.3; the mean of 1000 draws
        // has sd ~0.2.
        let total: usize = (0..1000)
            .map(|s| gen_er(20, 0.3, s).unwrap().edge_count())
            .sum();
        let mean = total as f64 / 1000.0;
        assert!((mean - 57.0).abs() <= 3.0, "mean {mean}");
    }

    #[test]
    fn scale_free_edge_counts() {
        assert_eq!(gen_scale_free(30, 3, 1).unwrap().edge_count(), 84);
        assert_eq!(gen_scale_free(50, 2, 1).unwrap().edge_count(), 97);
        assert_eq!(gen_scale_free(4, 4, 9).unwrap(), Graph::complete(4));
        assert_eq!(gen_scale_free(12, 1, 2).unwrap().edge_count(), 11);
        assert!(gen_scale_free(2, 3, 0).is_err());
        assert!(gen_scale_free(5, 0, 0).is_err());
    }

    #[test]
    fn scale_free_has_no_loops_and_is_connected() {
        for seed in 0..20 {
            let g = gen_scale_free(25, 2, seed).unwrap();
            assert!(g.is_consistent());
            assert_eq!(g.loop_count(), 0);
            assert!(g.bfs_distances(0).iter().all(|&d| d != usize::MAX));
        }
    }

    #[test]
    fn uniform_exact_counts() {
        assert_eq!(gen_uniform(8, 0, 1).unwrap().edge_count(), 0);
        assert_eq!(gen_uniform(8, 28, 1).unwrap(), Graph::complete(8));
        assert_eq!(gen_uniform(20, 40, 1).unwrap().edge_count(), 40);
        assert!(gen_uniform(8, 29, 1).is_err());
    }

    #[test]
    fn unrank_covers_all_pairs() {
        let n = 7;
        let pairs: Vec<_> = (0..21).map(|i| unrank_pair(n, i)).collect();
        assert_eq!(pairs, Graph::complete(n).edges().to_vec());
    }

    #[test]
    fn edge_removal() {
        let g = gen_er(15, 0.4, 5).unwrap();
        let m = g.edge_count();
        assert_eq!(remove_random_edges(&g, 0, 1).unwrap(), g);
        let empty = remove_random_edges(&g, m, 1).unwrap();
        assert_eq!(empty, Graph::empty(15));
        let a = remove_random_edges(&g, 7, 42).unwrap();
        assert_eq!(a, remove_random_edges(&g, 7, 42).unwrap());
        assert_eq!(a.edge_count(), m - 7);
        assert!(a.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        assert!(remove_random_edges(&g, m + 1, 1).is_err());
    }
}
