//! Random instance generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::ColoredGraph;

/// Erdos-Renyi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> ColoredGraph {
    let mut g = ColoredGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random bipartite graph on sides `0..a` and `a..a+b`, colored 0 and 1 by side.
pub fn random_bipartite<R: Rng + ?Sized>(a: usize, b: usize, p: f64, rng: &mut R) -> ColoredGraph {
    let mut colors = vec![0; a];
    colors.extend(std::iter::repeat(1).take(b));
    let mut g = ColoredGraph::empty(a + b).with_colors(colors);
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniform random permutation of `0..n` as an image vector.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Randomly relabelled copy.
pub fn shuffled<R: Rng + ?Sized>(g: &ColoredGraph, rng: &mut R) -> ColoredGraph {
    g.permuted(&random_permutation(g.n(), rng))
}

/// Random graph with maximum degree at most `d`, built by random edge
/// insertions that respect the bound.
pub fn random_bounded_degree<R: Rng + ?Sized>(n: usize, d: usize, attempts: usize, rng: &mut R) -> ColoredGraph {
    let mut g = ColoredGraph::empty(n);
    if n < 2 {
        return g;
    }
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < d && g.degree(v) < d {
            g.add_edge(u, v);
        }
    }
    g
}
