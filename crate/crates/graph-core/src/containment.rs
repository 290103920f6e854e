use crate::graph::ColoredGraph;

/// Searches for an induced copy of `h` in `g`.
///
/// Returns the embedding `v -> witness[v]` on success. When `h` carries
/// colors (any nonzero id) the images must have the same color ids.
pub fn contains_induced(h: &ColoredGraph, g: &ColoredGraph) -> Option<Vec<usize>> {
    let k = h.n();
    let n = g.n();
    if k > n {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let colored = !h.is_uncolored();
    let order = search_order(h);
    let hdeg: Vec<usize> = (0..k).map(|v| h.degree(v)).collect();
    let gdeg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; n];
    let mut st = Search { h, g, order: &order, hdeg: &hdeg, gdeg: &gdeg, colored, map: &mut map, used: &mut used };
    if st.extend(0) {
        Some(map)
    } else {
        None
    }
}

/// True iff `g` contains none of the graphs in `forbidden`.
pub fn is_in_class(g: &ColoredGraph, forbidden: &[ColoredGraph]) -> bool {
    forbidden.iter().all(|h| contains_induced(h, g).is_none())
}

/// Greedy order: start at a maximum-degree vertex, then repeatedly take the
/// vertex with most already-placed neighbors, breaking ties by degree.
fn search_order(h: &ColoredGraph) -> Vec<usize> {
    let k = h.n();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], h.degree(a), std::cmp::Reverse(a)).cmp(&(links[b], h.degree(b), std::cmp::Reverse(b)))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for w in h.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    h: &'a ColoredGraph,
    g: &'a ColoredGraph,
    order: &'a [usize],
    hdeg: &'a [usize],
    gdeg: &'a [usize],
    colored: bool,
    map: &'a mut Vec<usize>,
    used: &'a mut Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let hn = self.h.n();
        let gn = self.g.n();
        let x_codeg = hn - 1 - self.hdeg[x];
        // restrict candidates to neighbors of an already mapped neighbor
        let anchor = self.order[..depth].iter().copied().find(|&p| self.h.has_edge(p, x));
        let candidates: Vec<usize> = match anchor {
            Some(p) => self.g.neighbor_vec(self.map[p]),
            None => (0..gn).collect(),
        };
        for y in candidates {
            if self.used[y] || self.gdeg[y] < self.hdeg[x] || gn - 1 - self.gdeg[y] < x_codeg {
                continue;
            }
            if self.colored && self.g.color(y) != self.h.color(x) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&p| self.h.has_edge(p, x) == self.g.has_edge(self.map[p], y));
            if !consistent {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[y] = false;
            self.map[x] = usize::MAX;
        }
        false
    }
}
