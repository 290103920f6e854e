use graph_core::ColoredGraph;
use permgroup::Permutation;

use crate::IsoError;

/// Largest graph accepted by [`brute_force_iso`] without the override.
pub const BRUTE_FORCE_LIMIT: usize = 9;

/// Exhaustive isomorphism test with witness, for graphs of at most
/// [`BRUTE_FORCE_LIMIT`] vertices.
pub fn brute_force_iso(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<Option<Permutation>, IsoError> {
    brute_force_iso_with(g1, g2, false)
}

/// [`brute_force_iso`]; `allow_large` lifts the size guard.
pub fn brute_force_iso_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    allow_large: bool,
) -> Result<Option<Permutation>, IsoError> {
    let n = g1.n().max(g2.n());
    if !allow_large && n > BRUTE_FORCE_LIMIT {
        return Err(IsoError::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let n = g1.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, 0, &mut map, &mut used) {
        Ok(Some(Permutation::from_images(map).expect("complete map is a bijection")))
    } else {
        Ok(None)
    }
}

fn extend(g1: &ColoredGraph, g2: &ColoredGraph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g1.n() {
        return true;
    }
    for w in 0..g2.n() {
        if used[w] || g1.color(v) != g2.color(w) || g1.degree(v) != g2.degree(w) {
            continue;
        }
        if (0..v).any(|u| g1.has_edge(u, v) != g2.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g1, g2, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}
