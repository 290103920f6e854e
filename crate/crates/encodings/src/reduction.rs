use graph_core::{join_universal, vertex_cap, ColoredGraph, GraphError};

use crate::{Adj, Encoding, EncodingError, Ln};

/// Label sequence `(p_1, ..., p_t)` of a simple path encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWitness {
    pub labels: Vec<usize>,
}

pub fn check_witness(enc: &Encoding, w: &PathWitness) -> Result<(), EncodingError> {
    let p = &w.labels;
    let bad = |m: String| Err(EncodingError::InvalidWitness(m));
    if p.len() < 2 {
        return bad("a path needs at least two labels".into());
    }
    if let Some(&x) = p.iter().find(|&&x| x >= enc.k()) {
        return bad(format!("label {x} out of range"));
    }
    for (i, x) in p.iter().enumerate() {
        if p[..i].contains(x) {
            return bad(format!("label {} repeated", enc.name(*x)));
        }
    }
    if !enc.is_l_symmetric() {
        return bad("L is not symmetric".into());
    }
    if enc.ln(p[0], p[1]) != Ln::Inf {
        return bad("the first budget must be unbounded".into());
    }
    let t = p.len();
    if !enc.ln(p[t - 1], p[t - 2]).at_least(2) {
        return bad("the last budget must be at least 2".into());
    }
    for s in p.windows(2) {
        if !enc.ln(s[0], s[1]).at_least(1) || !enc.ln(s[1], s[0]).at_least(1) {
            return bad(format!("budgets between {} and {} must be positive", enc.name(s[0]), enc.name(s[1])));
        }
    }
    Ok(())
}

/// Shortest, then lexicographically first, witness that `enc` is a simple
/// path encoding.
pub fn is_simple_path_encoding(enc: &Encoding) -> Option<PathWitness> {
    if !enc.is_l_symmetric() {
        return None;
    }
    for t in 2..=enc.k() {
        let mut seq = Vec::with_capacity(t);
        if let Some(w) = extend(enc, t, &mut seq) {
            return Some(w);
        }
    }
    None
}

fn extend(enc: &Encoding, t: usize, seq: &mut Vec<usize>) -> Option<PathWitness> {
    if seq.len() == t {
        let w = PathWitness { labels: seq.clone() };
        return check_witness(enc, &w).is_ok().then_some(w);
    }
    for x in 0..enc.k() {
        if seq.contains(&x) {
            continue;
        }
        if let Some(&y) = seq.last() {
            let first = seq.len() == 1;
            if (first && enc.ln(y, x) != Ln::Inf) || !enc.ln(y, x).at_least(1) || !enc.ln(x, y).at_least(1) {
                continue;
            }
        }
        seq.push(x);
        let found = extend(enc, t, seq);
        seq.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Output of [`reduce_into_class`] with the constructed labeling.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: ColoredGraph,
    pub phi: Vec<usize>,
}

/// Encodes `g` into the class of a simple path encoding.
///
/// Vertices are ordered as the original vertices, then one vertex per edge
/// (in the order of [`ColoredGraph::edges`]), then for every edge and each
/// of its two endpoints the inner path vertices `k = 2..t-1`.
pub fn reduce_into_class(g: &ColoredGraph, enc: &Encoding, w: &PathWitness) -> Result<Reduction, EncodingError> {
    check_witness(enc, w)?;
    let p = &w.labels;
    let t = p.len();
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let inner = t - 2;
    let total = n + m + 2 * m * inner;
    if total > vertex_cap() {
        return Err(GraphError::TooLarge { n: total, cap: vertex_cap() }.into());
    }
    let edge_vertex = |e: usize| n + e;
    let path_vertex = |e: usize, side: usize, k: usize| n + m + (2 * e + side) * inner + (k - 2);

    let mut phi = vec![p[0]; n];
    phi.extend(std::iter::repeat(p[t - 1]).take(m));
    for _ in 0..2 * m {
        phi.extend_from_slice(&p[1..t - 1]);
    }

    let mut h = ColoredGraph::empty(total);
    for x in 0..total {
        for y in x + 1..total {
            if enc.l(phi[x], phi[y]) == Adj::A {
                h.add_edge(x, y);
            }
        }
    }
    for (e, &(a, b)) in edges.iter().enumerate() {
        for (side, v) in [a, b].into_iter().enumerate() {
            if t == 2 {
                h.toggle_edge(v, edge_vertex(e));
                continue;
            }
            for k in 2..t - 1 {
                h.toggle_edge(path_vertex(e, side, k), path_vertex(e, side, k + 1));
            }
            h.toggle_edge(v, path_vertex(e, side, 2));
            h.toggle_edge(edge_vertex(e), path_vertex(e, side, t - 1));
        }
    }
    Ok(Reduction { graph: h, phi })
}

/// Whether `g` has at least `5n` edges, minimum degree at least 4 and
/// some vertex with at least 4 non-neighbors.
pub fn in_reduction_class(g: &ColoredGraph) -> bool {
    let n = g.n();
    let degs = g.degree_sequence();
    let min_deg = degs.iter().copied().min().unwrap_or(0);
    let max_codeg = degs.iter().map(|&d| n - 1 - d).max().unwrap_or(0);
    g.edge_count() >= 5 * n && min_deg >= 4 && max_codeg >= 4
}

/// Adds six pairwise non-adjacent vertices adjacent to everything else
/// until [`in_reduction_class`] holds. The output is uncolored.
pub fn normalize_for_reduction(g: &ColoredGraph) -> ColoredGraph {
    let mut h = g.uncolored();
    while !in_reduction_class(&h) {
        h = join_universal(&h, 6, 0);
    }
    h
}
