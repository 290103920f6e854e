#![allow(dead_code)]

use graph_core::ColoredGraph;

/// Backtracking isomorphism test over all vertex maps, checked edge by edge.
pub fn oracle_iso(g1: &ColoredGraph, g2: &ColoredGraph) -> bool {
    if g1.n() != g2.n() {
        return false;
    }
    let mut map = Vec::new();
    let mut used = vec![false; g2.n()];
    count_maps(g1, g2, &mut map, &mut used, true) > 0
}

/// Number of color-preserving automorphisms.
pub fn oracle_aut_count(g: &ColoredGraph) -> u64 {
    let mut map = Vec::new();
    let mut used = vec![false; g.n()];
    count_maps(g, g, &mut map, &mut used, false)
}

fn count_maps(g1: &ColoredGraph, g2: &ColoredGraph, map: &mut Vec<usize>, used: &mut [bool], first: bool) -> u64 {
    let v = map.len();
    if v == g1.n() {
        return 1;
    }
    let mut total = 0;
    for w in 0..g2.n() {
        if used[w] || g1.color(v) != g2.color(w) {
            continue;
        }
        if (0..v).any(|u| g1.has_edge(u, v) != g2.has_edge(map[u], w)) {
            continue;
        }
        map.push(w);
        used[w] = true;
        total += count_maps(g1, g2, map, used, first);
        used[w] = false;
        map.pop();
        if first && total > 0 {
            return total;
        }
    }
    total
}

/// All vertex subsets `M` with `2 <= |M| < n` that are modules in the
/// uncolored sense.
pub fn brute_nontrivial_modules(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let m: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if m.len() < 2 || m.len() == n {
            continue;
        }
        let ok = (0..n).filter(|&z| mask >> z & 1 == 0).all(|z| {
            let k = m.iter().filter(|&&x| g.has_edge(x, z)).count();
            k == 0 || k == m.len()
        });
        if ok {
            out.push(m);
        }
    }
    out
}
