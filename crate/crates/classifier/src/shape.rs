use graph_core::family::{subdivided_star, union_all};
use graph_core::ColoredGraph;

/// One nontrivial component of a forest of subdivided stars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarComponent {
    pub vertices: Vec<usize>,
    pub center: usize,
    /// Branch lengths, longest first.
    pub branches: Vec<usize>,
}

impl StarComponent {
    /// Parameters `(a_t, ..., a_1)`: `a_i` branches of length `i`.
    pub fn params(&self) -> Vec<usize> {
        let t = self.branches[0];
        (1..=t).rev().map(|len| self.branches.iter().filter(|&&b| b == len).count()).collect()
    }

    pub fn is_star(&self) -> bool {
        self.branches.iter().all(|&b| b == 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarForestShape {
    pub components: Vec<StarComponent>,
    pub isolated: usize,
}

impl StarForestShape {
    /// Disjoint union of the components followed by the isolated vertices.
    pub fn rebuild(&self) -> ColoredGraph {
        let mut parts: Vec<ColoredGraph> = self
            .components
            .iter()
            .map(|c| {
                let mut a = c.params();
                a.push(0);
                subdivided_star(&a).expect("parameters come from a valid component")
            })
            .collect();
        parts.push(ColoredGraph::empty(self.isolated));
        union_all(&parts)
    }
}

/// Splits `h` into subdivided stars and isolated vertices, if possible.
///
/// A component qualifies if it is a tree with at most one vertex of degree
/// at least 3. Paths get their center at index `(k - 1) / 2` along the path,
/// so the longer branch comes first.
pub fn is_forest_of_subdivided_stars(h: &ColoredGraph) -> Option<StarForestShape> {
    let mut components = Vec::new();
    let mut isolated = 0;
    for comp in h.components() {
        if comp.len() == 1 {
            isolated += 1;
            continue;
        }
        let mask = h.mask_of(comp.iter().copied());
        let edges: usize = comp.iter().map(|&v| h.degree_into(v, &mask)).sum::<usize>() / 2;
        if edges != comp.len() - 1 {
            return None;
        }
        let hubs: Vec<usize> = comp.iter().copied().filter(|&v| h.degree(v) >= 3).collect();
        let center = match hubs.as_slice() {
            [] => {
                let end = *comp.iter().find(|&&v| h.degree(v) == 1).expect("a path has an end");
                walk(h, end, usize::MAX, comp.len())[(comp.len() - 1) / 2]
            }
            [c] => *c,
            _ => return None,
        };
        let mut branches: Vec<usize> =
            h.neighbors(center).map(|first| walk(h, first, center, comp.len()).len()).collect();
        branches.sort_unstable_by(|a, b| b.cmp(a));
        components.push(StarComponent { vertices: comp, center, branches });
    }
    Some(StarForestShape { components, isolated })
}

/// Vertices along the path starting at `start`, not stepping back to `from`.
fn walk(h: &ColoredGraph, start: usize, from: usize, limit: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    while out.len() < limit {
        let Some(next) = h.neighbors(cur).find(|&w| w != prev) else {
            break;
        };
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}
