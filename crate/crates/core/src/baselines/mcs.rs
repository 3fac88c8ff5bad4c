use super::{Baseline, BaselineError, Orientation};
use crate::graph::Graph;

pub const MCS_MAX_VERTICES: usize = 10;

/// Order of the largest common node-induced subgraph, by exact branch and
/// bound over partial injective maps from `a` into `b` that preserve both
/// adjacency and non-adjacency (self-loops included).
pub fn max_common_induced_subgraph(a: &Graph, b: &Graph) -> Result<usize, BaselineError> {
    for g in [a, b] {
        if g.vertex_count() > MCS_MAX_VERTICES {
            return Err(BaselineError::TooLarge {
                limit: MCS_MAX_VERTICES,
                got: g.vertex_count(),
            });
        }
    }
    let search = Search {
        adj_a: masks(a),
        adj_b: masks(b),
        nb: b.vertex_count(),
    };
    let mut map = vec![usize::MAX; a.vertex_count()];
    let mut best = 0;
    search.extend(0, 0, 0, &mut map, &mut best);
    Ok(best)
}

/// `1 - |mcs| / max(|a|, |b|)`; two empty vertex sets are at distance 0.
pub fn mcs_distance(a: &Graph, b: &Graph) -> Result<f64, BaselineError> {
    let common = max_common_induced_subgraph(a, b)?;
    let larger = a.vertex_count().max(b.vertex_count());
    if larger == 0 {
        return Ok(0.0);
    }
    Ok(1.0 - common as f64 / larger as f64)
}

fn masks(g: &Graph) -> Vec<u16> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &u| m | 1 << u))
        .collect()
}

struct Search {
    adj_a: Vec<u16>,
    adj_b: Vec<u16>,
    nb: usize,
}

impl Search {
    fn extend(&self, v: usize, used: u16, size: usize, map: &mut [usize], best: &mut usize) {
        let na = self.adj_a.len();
        let free_b = self.nb - used.count_ones() as usize;
        if size + (na - v).min(free_b) <= *best {
            return;
        }
        if v == na {
            *best = size;
            return;
        }
        let bit = |m: u16, i: usize| m >> i & 1 == 1;
        for w in (0..self.nb).filter(|&w| !bit(used, w)) {
            let compatible = bit(self.adj_a[v], v) == bit(self.adj_b[w], w)
                && (0..v).all(|u| {
                    map[u] == usize::MAX || bit(self.adj_a[v], u) == bit(self.adj_b[w], map[u])
                });
            if compatible {
                map[v] = w;
                self.extend(v + 1, used | 1 << w, size + 1, map, best);
                map[v] = usize::MAX;
            }
        }
        self.extend(v + 1, used, size, map, best);
    }
}

pub struct Mcs;

impl Baseline for Mcs {
    fn name(&self) -> &'static str {
        "mcs"
    }
    fn orientation(&self) -> Orientation {
        Orientation::Distance
    }
    fn evaluate(&self, a: &Graph, b: &Graph) -> Result<f64, BaselineError> {
        mcs_distance(a, b)
    }
}
