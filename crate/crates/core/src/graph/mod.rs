//! Undirected simple graphs (self-loops allowed), permutations and structural
//! queries.
//!
//! A [`Graph`] is immutable once built. Adjacency lists are kept sorted, which
//! gives the walk engine its canonical arc order for free.

mod builtin;
mod generators;
pub mod io;

use std::collections::VecDeque;
use std::fmt;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use builtin::builtin_graph;
pub use generators::{gen_er, gen_scale_free, gen_uniform, remove_random_edges};

use crate::rng;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("unknown builtin graph {0:?}")]
    UnknownBuiltin(String),
}

/// Undirected graph on vertices `0..n`.
///
/// A self-loop `{v, v}` is stored once and contributes 1 to `degree(v)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from unordered pairs. `{u, v}` and `{v, u}` are the same
    /// edge; listing both is a duplicate.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            let (a, b) = if u <= v { (u, v) } else { (v, u) };
            list.push((a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(a, b) in &list {
            adjacency[a].push(b);
            if a != b {
                adjacency[b].push(a);
            }
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edges: list,
        })
    }

    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            if a != b {
                adjacency[b].push(a);
            }
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Graph { adjacency, edges }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unique(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted_unique(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::path(n);
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Vertex 0 joined to `leaves` pendant vertices.
    pub fn star(leaves: usize) -> Self {
        Self::from_sorted_unique(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbours of `v`; contains `v` itself when it carries a loop.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|(u, v)| u == v)
    }

    pub fn isolated_count(&self) -> usize {
        self.adjacency.iter().filter(|a| a.is_empty()).count()
    }

    /// Checks the structural invariants: symmetric adjacency, no duplicates,
    /// and `sum(deg) = 2|E| - loops`.
    pub fn is_consistent(&self) -> bool {
        let n = self.vertex_count();
        let symmetric = (0..n).all(|u| {
            self.adjacency[u].windows(2).all(|w| w[0] < w[1])
                && self.adjacency[u].iter().all(|&v| self.has_edge(v, u))
        });
        let degree_sum: usize = self.adjacency.iter().map(Vec::len).sum();
        let unique = self.edges.windows(2).all(|w| w[0] < w[1]);
        symmetric
            && unique
            && self.edge_count() <= n * (n + 1) / 2
            && degree_sum == 2 * self.edge_count() - self.loop_count()
    }

    /// Relabels vertex `v` to `p(v)`.
    pub fn permute(&self, p: &Permutation) -> Result<Graph, GraphError> {
        if p.len() != self.vertex_count() {
            return Err(GraphError::InvalidPermutation(format!(
                "length {} does not match vertex count {}",
                p.len(),
                self.vertex_count()
            )));
        }
        Graph::from_edges(
            self.vertex_count(),
            self.edges.iter().map(|&(u, v)| (p.apply(u), p.apply(v))),
        )
    }

    /// Copy without the edges at the given indices into [`Graph::edges`].
    pub fn without_edges(&self, drop: &[usize]) -> Graph {
        let mut keep = vec![true; self.edges.len()];
        for &i in drop {
            keep[i] = false;
        }
        let edges = self
            .edges
            .iter()
            .zip(keep)
            .filter_map(|(e, k)| k.then_some(*e))
            .collect();
        Graph::from_sorted_unique(self.vertex_count(), edges)
    }

    /// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Largest finite shortest-path distance over all vertex pairs. Pairs in
    /// different components are ignored, so a disconnected graph reports its
    /// largest component-internal eccentricity. Edgeless graphs give 0.
    pub fn diameter(&self) -> usize {
        (0..self.vertex_count())
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .filter(|&d| d != usize::MAX)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if a[i] != u && a[i] != v {
                        count += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Exhaustive check against strongly-regular parameters.
    pub fn satisfies_srg(&self, params: &SrgParams) -> bool {
        let n = self.vertex_count();
        if n != params.n || self.has_loops() {
            return false;
        }
        if (0..n).any(|v| self.degree(v) != params.k) {
            return false;
        }
        (0..n).all(|u| {
            ((u + 1)..n).all(|v| {
                let expected = if self.has_edge(u, v) {
                    params.lambda
                } else {
                    params.mu
                };
                self.common_neighbors(u, v) == expected
            })
        })
    }

    /// The induced subgraph on `vertices`, relabelled to `0..vertices.len()`
    /// in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a) {
                if self.has_edge(u, v) {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced edges are unique")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges)
            .finish()
    }
}

/// Parameters `(n, k, lambda, mu)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub const fn new(n: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { n, k, lambda, mu }
    }
}

/// A bijection on `0..n`; `apply(v)` is the new label of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self, GraphError> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::InvalidPermutation(format!(
                    "{mapping:?} is not a bijection on 0..{n}"
                )));
            }
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Uniformly random permutation drawn from stream `stream` of `seed`.
    pub fn random(n: usize, seed: u64, stream: u64) -> Self {
        let mut mapping: Vec<usize> = (0..n).collect();
        mapping.shuffle(&mut rng::stream(seed, stream));
        Permutation(mapping)
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &image) in self.0.iter().enumerate() {
            inv[image] = v;
        }
        Permutation(inv)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}
