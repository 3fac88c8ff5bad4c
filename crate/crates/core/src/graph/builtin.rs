use super::{Graph, GraphError};

/// Named reference graphs.
///
/// Fixed: `k33`, `octahedron`, `rook4x4`, `shrikhande`. Parameterised:
/// `complete(n)`, `empty(n)`, `path(n)`, `cycle(n)`, `star(leaves)`.
pub fn builtin_graph(name: &str) -> Result<Graph, GraphError> {
    let name = name.trim();
    match name {
        "k33" => return Ok(complete_bipartite(3, 3)),
        "octahedron" => return Ok(octahedron()),
        "rook4x4" => return Ok(rook(4)),
        "shrikhande" => return Ok(shrikhande()),
        _ => {}
    }
    let unknown = || GraphError::UnknownBuiltin(name.to_string());
    let (family, rest) = name.split_once('(').ok_or_else(unknown)?;
    let arg: usize = rest
        .strip_suffix(')')
        .and_then(|a| a.trim().parse().ok())
        .ok_or_else(unknown)?;
    match family.trim() {
        "complete" => Ok(Graph::complete(arg)),
        "empty" => Ok(Graph::empty(arg)),
        "path" => Ok(Graph::path(arg)),
        "cycle" => Ok(Graph::cycle(arg)),
        "star" => Ok(Graph::star(arg)),
        _ => Err(unknown()),
    }
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_sorted_unique(a + b, edges)
}

/// `K_6` minus the perfect matching `{i, i + 3}`.
fn octahedron() -> Graph {
    let edges = (0..6)
        .flat_map(|u| ((u + 1)..6).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + 3)
        .collect();
    Graph::from_sorted_unique(6, edges)
}

/// `K_s x K_s`: cells of an `s x s` board, adjacent when sharing a row or column.
fn rook(s: usize) -> Graph {
    let n = s * s;
    let edges = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u / s == v / s || u % s == v % s)
        .collect();
    Graph::from_sorted_unique(n, edges)
}

/// Cayley graph on `Z4 x Z4` with connection set `±(1,0), ±(0,1), ±(1,1)`.
fn shrikhande() -> Graph {
    let id = |r: usize, c: usize| (r % 4) * 4 + (c % 4);
    let mut edges = Vec::new();
    for r in 0..4 {
        for c in 0..4 {
            let u = id(r, c);
            for v in [id(r + 1, c), id(r, c + 1), id(r + 1, c + 1)] {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    edges.sort_unstable();
    Graph::from_sorted_unique(16, edges)
}

#[cfg(test)]
mod tests {
    use super::super::SrgParams;
    use super::*;

    /// Edge count of the subgraph induced by the neighbourhood of `v`, and its
    /// degree multiset.
    fn neighbourhood_shape(g: &Graph, v: usize) -> (usize, Vec<usize>) {
        let sub = g.induced_subgraph(g.neighbors(v));
        let mut degs = sub.degrees();
        degs.sort_unstable();
        (sub.edge_count(), degs)
    }

    fn is_two_disjoint_triangles(g: &Graph) -> bool {
        g.vertex_count() == 6
            && g.edge_count() == 6
            && g.degrees().iter().all(|&d| d == 2)
            && (0..6)
                .filter(|&v| g.bfs_distances(0)[v] != usize::MAX)
                .count()
                == 3
    }

    fn is_six_cycle(g: &Graph) -> bool {
        g.vertex_count() == 6
            && g.edge_count() == 6
            && g.degrees().iter().all(|&d| d == 2)
            && g.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    #[test]
    fn srg_parameters() {
        let k33 = builtin_graph("k33").unwrap();
        assert!(k33.satisfies_srg(&SrgParams::new(6, 3, 0, 3)));
        let oct = builtin_graph("octahedron").unwrap();
        assert!(oct.satisfies_srg(&SrgParams::new(6, 4, 2, 4)));
        let p16 = SrgParams::new(16, 6, 2, 2);
        assert!(builtin_graph("rook4x4").unwrap().satisfies_srg(&p16));
        assert!(builtin_graph("shrikhande").unwrap().satisfies_srg(&p16));
        assert!(!k33.satisfies_srg(&SrgParams::new(6, 3, 1, 3)));
    }

    #[test]
    fn rook_and_shrikhande_neighbourhoods_differ() {
        let rook = builtin_graph("rook4x4").unwrap();
        let shr = builtin_graph("shrikhande").unwrap();
        for v in 0..16 {
            assert!(is_two_disjoint_triangles(
                &rook.induced_subgraph(rook.neighbors(v))
            ));
            assert!(is_six_cycle(&shr.induced_subgraph(shr.neighbors(v))));
            assert_eq!(neighbourhood_shape(&rook, v).1, vec![2; 6]);
        }
    }

    #[test]
    fn parameterised_families() {
        assert_eq!(builtin_graph("complete(5)").unwrap().edge_count(), 10);
        assert_eq!(builtin_graph("empty(4)").unwrap().vertex_count(), 4);
        assert_eq!(builtin_graph("path(4)").unwrap().diameter(), 3);
        assert_eq!(builtin_graph("cycle(6)").unwrap().edge_count(), 6);
        assert_eq!(builtin_graph("star(3)").unwrap().degree(0), 3);
    }

    #[test]
    fn unknown_names() {
        for bad in ["petersen", "complete", "complete(x)", "wheel(5)", "path(3"] {
            assert!(matches!(
                builtin_graph(bad),
                Err(GraphError::UnknownBuiltin(_))
            ));
        }
    }
}
