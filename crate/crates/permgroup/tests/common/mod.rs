//! Exhaustive oracles used only by tests.

use std::collections::{BTreeSet, VecDeque};

use graph_core::ColoredGraph;
use permgroup::Permutation;

/// Every element of the group generated by `gens`, by breadth-first closure.
pub fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Vec<usize>> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&p| g.apply(p)).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// All color-preserving automorphisms by naive vertex-by-vertex backtracking.
pub fn brute_automorphisms(g: &ColoredGraph) -> Vec<Vec<usize>> {
    brute_isomorphisms(g, g)
}

/// All color-preserving isomorphisms `g1 -> g2`.
pub fn brute_isomorphisms(g1: &ColoredGraph, g2: &ColoredGraph) -> Vec<Vec<usize>> {
    fn rec(g1: &ColoredGraph, g2: &ColoredGraph, map: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let v = map.len();
        if v == g1.n() {
            out.push(map.clone());
            return;
        }
        for w in 0..g2.n() {
            if used[w] || g1.color(v) != g2.color(w) {
                continue;
            }
            if (0..v).all(|u| g1.has_edge(u, v) == g2.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                rec(g1, g2, map, used, out);
                used[w] = false;
                map.pop();
            }
        }
    }
    let mut out = Vec::new();
    if g1.n() == g2.n() {
        rec(g1, g2, &mut Vec::new(), &mut vec![false; g2.n()], &mut out);
    }
    out
}
