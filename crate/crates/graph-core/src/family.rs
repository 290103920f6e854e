use crate::error::GraphError;
use crate::graph::ColoredGraph;
use crate::ops::{complement, disjoint_union};

/// Named graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Independent(usize),
    Biclique(usize, usize),
    /// `H(a_t, ..., a_1, a_0)`, parameters listed from `a_t` down to `a_0`.
    SubdividedStar(Vec<usize>),
    DisjointUnion(Box<GraphFamily>, Box<GraphFamily>),
    Complement(Box<GraphFamily>),
}

impl GraphFamily {
    pub fn union(a: GraphFamily, b: GraphFamily) -> GraphFamily {
        GraphFamily::DisjointUnion(Box::new(a), Box::new(b))
    }

    pub fn complement_of(f: GraphFamily) -> GraphFamily {
        GraphFamily::Complement(Box::new(f))
    }
}

/// Builds the uncolored graph of a family.
pub fn build_named(f: &GraphFamily) -> Result<ColoredGraph, GraphError> {
    Ok(match f {
        GraphFamily::Complete(t) => complete(*t),
        GraphFamily::Path(t) => path(*t),
        GraphFamily::Cycle(t) => {
            if *t < 3 {
                return Err(GraphError::BadFamily(format!("cycle needs at least 3 vertices, got {t}")));
            }
            cycle(*t)
        }
        GraphFamily::Independent(t) => ColoredGraph::empty(*t),
        GraphFamily::Biclique(s, t) => biclique(*s, *t),
        GraphFamily::SubdividedStar(a) => subdivided_star(a)?,
        GraphFamily::DisjointUnion(a, b) => disjoint_union(&build_named(a)?, &build_named(b)?),
        GraphFamily::Complement(a) => complement(&build_named(a)?),
    })
}

pub fn complete(t: usize) -> ColoredGraph {
    let mut g = ColoredGraph::empty(t);
    for u in 0..t {
        for v in u + 1..t {
            g.add_edge(u, v);
        }
    }
    g
}

/// Path on `t` vertices.
pub fn path(t: usize) -> ColoredGraph {
    let mut g = ColoredGraph::empty(t);
    for v in 1..t {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle on `t >= 3` vertices.
pub fn cycle(t: usize) -> ColoredGraph {
    let mut g = path(t);
    if t >= 3 {
        g.add_edge(t - 1, 0);
    }
    g
}

pub fn independent(t: usize) -> ColoredGraph {
    ColoredGraph::empty(t)
}

/// `K_{s,t}` with the `s` side first.
pub fn biclique(s: usize, t: usize) -> ColoredGraph {
    let mut g = ColoredGraph::empty(s + t);
    for u in 0..s {
        for v in s..s + t {
            g.add_edge(u, v);
        }
    }
    g
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> ColoredGraph {
    let mut g = ColoredGraph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// Disjoint union of a list of graphs.
pub fn union_all(parts: &[ColoredGraph]) -> ColoredGraph {
    parts.iter().fold(ColoredGraph::empty(0), |acc, g| disjoint_union(&acc, g))
}

/// `H(a_t, ..., a_1, a_0)`: a center with `a_i` paths of length `i` and
/// `a_0` isolated vertices.
///
/// With at least three branches the center is vertex 0 and the branches
/// follow in order of decreasing length. With fewer branches the graph is a
/// path, numbered along the path, with the center at the position nearer
/// the low end.
pub fn subdivided_star(a: &[usize]) -> Result<ColoredGraph, GraphError> {
    if a.is_empty() {
        return Err(GraphError::BadFamily("subdivided star needs at least a_0".into()));
    }
    let t = a.len() - 1;
    if t > 0 && a[0] == 0 {
        return Err(GraphError::BadFamily("leading parameter a_t must be positive".into()));
    }
    let isolated = a[t];
    let mut branches: Vec<usize> = Vec::new();
    for (pos, &count) in a[..t].iter().enumerate() {
        let len = t - pos;
        branches.extend(std::iter::repeat(len).take(count));
    }
    let body = branches.iter().sum::<usize>() + 1;
    let mut g = ColoredGraph::empty(body + isolated);
    if branches.len() < 3 {
        // path 0..body-1; the center sits at index subdivided_star_center(a)
        for v in 1..body {
            g.add_edge(v - 1, v);
        }
    } else {
        let mut next = 1;
        for &len in &branches {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
    }
    Ok(g)
}

/// Center vertex of the graph produced by [`subdivided_star`] for `a`.
pub fn subdivided_star_center(a: &[usize]) -> usize {
    let t = a.len().saturating_sub(1);
    let mut branches: Vec<usize> = Vec::new();
    for (pos, &count) in a[..t].iter().enumerate() {
        branches.extend(std::iter::repeat(t - pos).take(count));
    }
    match branches.as_slice() {
        [_, y] => *y,
        _ => 0,
    }
}
