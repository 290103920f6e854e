use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::GraphError;

/// Default upper bound on the vertex count.
pub const DEFAULT_VERTEX_CAP: usize = 4096;

static VERTEX_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_VERTEX_CAP);

/// Current vertex cap enforced by the checked constructors.
pub fn vertex_cap() -> usize {
    VERTEX_CAP.load(Ordering::Relaxed)
}

/// Changes the vertex cap. Intended for configuration at startup.
pub fn set_vertex_cap(cap: usize) {
    VERTEX_CAP.store(cap, Ordering::Relaxed);
}

/// Simple undirected graph with one color id per vertex.
///
/// Adjacency is stored as packed bit rows. Color ids are plain integers;
/// cross-graph comparisons are only meaningful when both graphs take their
/// ids from the same [`ColorTable`](crate::ColorTable) or the same joint
/// refinement.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    colors: Vec<u32>,
}

impl std::fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ColoredGraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .field("colors", &self.colors)
            .finish()
    }
}

impl ColoredGraph {
    /// Edgeless graph on `n` vertices, all of color 0.
    ///
    /// Panics if `n` exceeds the vertex cap; use [`make_graph`](crate::make_graph)
    /// for checked construction.
    pub fn empty(n: usize) -> Self {
        assert!(n <= vertex_cap(), "vertex count {n} exceeds cap {}", vertex_cap());
        let words = n.div_ceil(64);
        ColoredGraph { n, words, bits: vec![0; n * words], colors: vec![0; n] }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > vertex_cap() {
            return Err(GraphError::TooLarge { n, cap: vertex_cap() });
        }
        let mut g = ColoredGraph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    /// Inserts the edge `{u, v}`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    /// Flips adjacency of `{u, v}`.
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    /// Packed adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors { row: self.row(v), word: 0, cur: self.row(v).first().copied().unwrap_or(0) }
    }

    pub fn neighbor_vec(&self, v: usize) -> Vec<usize> {
        self.neighbors(v).collect()
    }

    /// Number of neighbors of `v` inside the vertex set given as a bit mask.
    pub fn degree_into(&self, v: usize, mask: &[u64]) -> usize {
        self.row(v).iter().zip(mask).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn set_color(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
    }

    /// Same adjacency, new colors.
    pub fn with_colors(&self, colors: Vec<u32>) -> Self {
        assert_eq!(colors.len(), self.n, "color vector length mismatch");
        ColoredGraph { colors, ..self.clone() }
    }

    /// Same adjacency, every vertex colored 0.
    pub fn uncolored(&self) -> Self {
        self.with_colors(vec![0; self.n])
    }

    /// True when every vertex carries color 0.
    pub fn is_uncolored(&self) -> bool {
        self.colors.iter().all(|&c| c == 0)
    }

    pub fn max_color(&self) -> Option<u32> {
        self.colors.iter().copied().max()
    }

    /// Color classes keyed by color id.
    pub fn color_classes(&self) -> BTreeMap<u32, Vec<usize>> {
        let mut map: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            map.entry(c).or_default().push(v);
        }
        map
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut h = ColoredGraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            h.colors[i] = self.colors[u];
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// Image under the vertex map `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut h = ColoredGraph::empty(self.n);
        for u in 0..self.n {
            h.colors[perm[u]] = self.colors[u];
            for v in self.neighbors(u) {
                if u < v {
                    h.add_edge(perm[u], perm[v]);
                }
            }
        }
        h
    }

    /// Bit mask with the given vertices set.
    pub fn mask_of(&self, vertices: impl IntoIterator<Item = usize>) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for v in vertices {
            m[v / 64] |= 1 << (v % 64);
        }
        m
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Breadth-first distances from `s`; unreachable vertices get `None`.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

/// Iterator over set bits of an adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
    }
}
