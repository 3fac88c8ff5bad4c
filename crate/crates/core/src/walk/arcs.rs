use std::ops::Range;

use crate::graph::Graph;

/// Directed arc basis of a graph in CSR layout.
///
/// Arcs leaving `x` occupy `offsets[x]..offsets[x + 1]` and are sorted by
/// head vertex. `reverse[a]` is the index of the opposite arc; a loop arc
/// maps to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSpace {
    offsets: Vec<usize>,
    heads: Vec<usize>,
    reverse: Vec<usize>,
}

impl ArcSpace {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut heads = Vec::new();
        offsets.push(0);
        for x in 0..n {
            heads.extend_from_slice(g.neighbors(x));
            offsets.push(heads.len());
        }
        let mut reverse = vec![0; heads.len()];
        for x in 0..n {
            for arc in offsets[x]..offsets[x + 1] {
                let y = heads[arc];
                let back = heads[offsets[y]..offsets[y + 1]]
                    .binary_search(&x)
                    .expect("adjacency is symmetric");
                reverse[arc] = offsets[y] + back;
            }
        }
        ArcSpace {
            offsets,
            heads,
            reverse,
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.heads.len()
    }

    #[inline]
    pub fn node_slice(&self, x: usize) -> Range<usize> {
        self.offsets[x]..self.offsets[x + 1]
    }

    #[inline]
    pub fn degree(&self, x: usize) -> usize {
        self.offsets[x + 1] - self.offsets[x]
    }

    pub fn head(&self, arc: usize) -> usize {
        self.heads[arc]
    }

    /// Tail vertex of `arc`.
    pub fn tail(&self, arc: usize) -> usize {
        self.offsets.partition_point(|&o| o <= arc) - 1
    }

    #[inline]
    pub fn reverse(&self, arc: usize) -> usize {
        self.reverse[arc]
    }

    pub(crate) fn reverse_map(&self) -> &[usize] {
        &self.reverse
    }

    pub fn has_isolated(&self) -> bool {
        self.offsets.windows(2).any(|w| w[0] == w[1])
    }
}
