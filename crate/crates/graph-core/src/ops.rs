use crate::color::ColorTable;
use crate::error::GraphError;
use crate::graph::ColoredGraph;

/// Checked construction. Vertices without a description get the empty
/// (default) color.
pub fn make_graph(
    n: usize,
    edges: &[(usize, usize)],
    colors: Option<&[&str]>,
    table: &mut ColorTable,
) -> Result<ColoredGraph, GraphError> {
    let mut g = ColoredGraph::from_edges(n, edges)?;
    if let Some(descs) = colors {
        if descs.len() != n {
            return Err(GraphError::ColorCount { got: descs.len(), expected: n });
        }
        for (v, d) in descs.iter().enumerate() {
            g.set_color(v, table.intern(d));
        }
    } else {
        let c = table.intern("");
        for v in 0..n {
            g.set_color(v, c);
        }
    }
    Ok(g)
}

/// Edge complement; colors are kept.
pub fn complement(g: &ColoredGraph) -> ColoredGraph {
    let n = g.n();
    let mut h = ColoredGraph::empty(n).with_colors(g.colors().to_vec());
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Complements the edges between `a` and `b`, which must partition the
/// vertex set with no edge inside either side.
pub fn bipartite_complement(
    g: &ColoredGraph,
    a: &[usize],
    b: &[usize],
) -> Result<ColoredGraph, GraphError> {
    let n = g.n();
    let mut side = vec![0u8; n];
    for (s, part) in [(1u8, a), (2u8, b)] {
        for &v in part {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if side[v] != 0 {
                return Err(GraphError::BadBipartition(format!("vertex {v} listed twice")));
            }
            side[v] = s;
        }
    }
    if let Some(v) = side.iter().position(|&s| s == 0) {
        return Err(GraphError::BadBipartition(format!("vertex {v} in neither side")));
    }
    for (u, v) in g.edges() {
        if side[u] == side[v] {
            return Err(GraphError::BadBipartition(format!("edge {{{u}, {v}}} inside a side")));
        }
    }
    let mut h = ColoredGraph::empty(n).with_colors(g.colors().to_vec());
    for &u in a {
        for &v in b {
            if !g.has_edge(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    Ok(h)
}

/// Disjoint union; the vertices of `g2` follow those of `g1`.
pub fn disjoint_union(g1: &ColoredGraph, g2: &ColoredGraph) -> ColoredGraph {
    let n1 = g1.n();
    let mut colors = g1.colors().to_vec();
    colors.extend_from_slice(g2.colors());
    let mut h = ColoredGraph::empty(n1 + g2.n()).with_colors(colors);
    for (u, v) in g1.edges() {
        h.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        h.add_edge(n1 + u, n1 + v);
    }
    h
}

/// Adds `k` pairwise non-adjacent vertices of color `c`, each adjacent to
/// every original vertex.
pub fn join_universal(g: &ColoredGraph, k: usize, c: u32) -> ColoredGraph {
    let n = g.n();
    let mut colors = g.colors().to_vec();
    colors.extend(std::iter::repeat(c).take(k));
    let mut h = ColoredGraph::empty(n + k).with_colors(colors);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for x in n..n + k {
        for u in 0..n {
            h.add_edge(u, x);
        }
    }
    h
}
