//! Exhaustive oracles used only by tests.

use graph_core::ColoredGraph;

/// All permutations of `items` in lexicographic index order.
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Subsets of `0..n` of size `k`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Checks whether `map` is an induced color-respecting embedding.
pub fn is_embedding(h: &ColoredGraph, g: &ColoredGraph, map: &[usize], colored: bool) -> bool {
    for u in 0..h.n() {
        if colored && h.color(u) != g.color(map[u]) {
            return false;
        }
        for v in u + 1..h.n() {
            if map[u] == map[v] || h.has_edge(u, v) != g.has_edge(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

/// Induced containment by enumerating every vertex subset and ordering.
pub fn brute_contains(h: &ColoredGraph, g: &ColoredGraph) -> bool {
    if h.n() > g.n() {
        return false;
    }
    let colored = !h.is_uncolored();
    subsets(g.n(), h.n())
        .iter()
        .any(|s| permutations(s).iter().any(|p| is_embedding(h, g, p, colored)))
}

/// Isomorphism by trying every bijection.
pub fn brute_iso(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && permutations(&(0..a.n()).collect::<Vec<_>>()).iter().any(|p| is_embedding(a, b, p, true))
}
