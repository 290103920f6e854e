//! Naive vertex refinement (1-dimensional Weisfeiler-Leman), joint
//! refinement, individualization, refinement by adjacency and color valence.
//!
//! Refined color ids are canonical: a round assigns new ids by sorting the
//! pairs (old color, multiset of neighbor colors) lexicographically, so
//! isomorphic inputs receive identical ids on corresponding vertices.

use graph_core::{disjoint_union, ColorTable, ColoredGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RefineError {
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("vertex {0} listed twice")]
    Repeated(usize),
}

/// Coarsest stable refinement of a coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableColoring {
    /// Color id per vertex.
    pub colors: Vec<u32>,
    /// Vertices of each color id, sorted; may contain empty classes when the
    /// coloring is one side of a joint refinement.
    pub classes: Vec<Vec<usize>>,
    /// `degrees[c][c2]`: neighbors a vertex of color `c` has in class `c2`.
    pub degrees: Vec<Vec<usize>>,
}

impl StableColoring {
    fn from_colors(g: &ColoredGraph, colors: Vec<u32>, num: usize) -> Self {
        let mut classes = vec![Vec::new(); num];
        for (v, &c) in colors.iter().enumerate() {
            classes[c as usize].push(v);
        }
        let mut degrees = vec![vec![0usize; num]; num];
        for (c, class) in classes.iter().enumerate() {
            if let Some(&v) = class.first() {
                for w in g.neighbors(v) {
                    degrees[c][colors[w] as usize] += 1;
                }
            }
        }
        StableColoring { colors, classes, degrees }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Nonempty classes in color order.
    pub fn nonempty_classes(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.classes.iter().filter(|c| !c.is_empty())
    }

    pub fn d(&self, c: u32, c2: u32) -> usize {
        self.degrees[c as usize][c2 as usize]
    }

    /// Checks `|N(v) ∩ C'| = d(color(v), C')` for every vertex and class.
    pub fn is_stable_for(&self, g: &ColoredGraph) -> bool {
        let num = self.classes.len();
        (0..g.n()).all(|v| {
            let mut counts = vec![0usize; num];
            for w in g.neighbors(v) {
                counts[self.colors[w] as usize] += 1;
            }
            let c = self.colors[v] as usize;
            (0..num).all(|c2| self.classes[c2].is_empty() || counts[c2] == self.degrees[c][c2])
        })
    }

    /// The graph recolored with this coloring.
    pub fn apply(&self, g: &ColoredGraph) -> ColoredGraph {
        g.with_colors(self.colors.clone())
    }
}

/// Dense ranks of `values`, preserving their order.
pub fn rank_colors(values: &[u32]) -> (Vec<u32>, usize) {
    let mut distinct: Vec<u32> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let ranked = values.iter().map(|v| distinct.binary_search(v).unwrap() as u32).collect();
    (ranked, distinct.len())
}

/// Adjacency lists cached for repeated refinement of one graph.
#[derive(Clone, Debug)]
pub struct Refiner {
    adj: Vec<Vec<usize>>,
}

impl Refiner {
    pub fn new(g: &ColoredGraph) -> Self {
        Refiner { adj: (0..g.n()).map(|v| g.neighbor_vec(v)).collect() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Refines `initial` to the coarsest stable coloring and returns
    /// canonical ids together with the number of classes.
    pub fn refine(&self, initial: &[u32]) -> (Vec<u32>, usize) {
        let n = self.adj.len();
        let (mut colors, mut num) = rank_colors(initial);
        let mut sigs: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut order: Vec<usize> = (0..n).collect();
        loop {
            for v in 0..n {
                let s = &mut sigs[v];
                s.clear();
                s.extend(self.adj[v].iter().map(|&w| colors[w]));
                s.sort_unstable();
            }
            order.sort_by(|&a, &b| colors[a].cmp(&colors[b]).then_with(|| sigs[a].cmp(&sigs[b])));
            let mut next = vec![0u32; n];
            let mut id = 0u32;
            for i in 0..n {
                if i > 0 {
                    let (p, q) = (order[i - 1], order[i]);
                    if colors[p] != colors[q] || sigs[p] != sigs[q] {
                        id += 1;
                    }
                }
                next[order[i]] = id;
            }
            let new_num = if n == 0 { 0 } else { id as usize + 1 };
            let done = new_num == num;
            colors = next;
            num = new_num;
            if done {
                return (colors, num);
            }
        }
    }
}

/// Refines `initial` to the coarsest stable coloring and returns canonical
/// ids together with the number of classes.
pub fn refine_colors(g: &ColoredGraph, initial: &[u32]) -> (Vec<u32>, usize) {
    Refiner::new(g).refine(initial)
}

/// Coarsest stable refinement of the graph's own coloring.
pub fn naive_refine(g: &ColoredGraph) -> StableColoring {
    let (colors, num) = refine_colors(g, g.colors());
    StableColoring::from_colors(g, colors, num)
}

/// `g` recolored by its stable refinement.
pub fn refined_graph(g: &ColoredGraph) -> ColoredGraph {
    g.with_colors(refine_colors(g, g.colors()).0)
}

/// Refines the disjoint union and projects back; both sides share one
/// color space.
pub fn joint_refine(g1: &ColoredGraph, g2: &ColoredGraph) -> (StableColoring, StableColoring) {
    let u = disjoint_union(g1, g2);
    let (colors, num) = refine_colors(&u, u.colors());
    let n1 = g1.n();
    let full = StableColoring::from_colors(&u, colors.clone(), num);
    let side = |cs: Vec<u32>| {
        let mut classes = vec![Vec::new(); num];
        for (v, &c) in cs.iter().enumerate() {
            classes[c as usize].push(v);
        }
        StableColoring { colors: cs, classes, degrees: full.degrees.clone() }
    };
    (side(colors[..n1].to_vec()), side(colors[n1..].to_vec()))
}

/// Gives `v` a fresh color derived from its old color.
///
/// The new description is the old one with an individualization mark; marks
/// are appended until the id is unused in `g`, so two graphs in the same
/// color state individualized in lockstep receive the same ids.
pub fn individualize(g: &ColoredGraph, v: usize, table: &mut ColorTable) -> Result<ColoredGraph, RefineError> {
    if v >= g.n() {
        return Err(RefineError::BadVertex(v));
    }
    if let Some(m) = g.max_color() {
        table.reserve_through(m);
    }
    let mut desc = format!("{}!", table.describe(g.color(v)).unwrap());
    let id = loop {
        let id = table.intern(&desc);
        if !g.colors().contains(&id) {
            break id;
        }
        desc.push('!');
    };
    let mut h = g.clone();
    h.set_color(v, id);
    Ok(h)
}

/// Makes each `s[i]` a singleton and recolors every other vertex by its old
/// color plus its adjacency pattern towards `s`. No further refinement.
pub fn refine_by_adjacency(g: &ColoredGraph, s: &[usize], table: &mut ColorTable) -> Result<ColoredGraph, RefineError> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &x in s {
        if x >= n {
            return Err(RefineError::BadVertex(x));
        }
        if in_s[x] {
            return Err(RefineError::Repeated(x));
        }
        in_s[x] = true;
    }
    if s.is_empty() {
        return Ok(g.clone());
    }
    if let Some(m) = g.max_color() {
        table.reserve_through(m);
    }
    let mut colors = vec![0u32; n];
    for (i, &x) in s.iter().enumerate() {
        colors[x] = table.intern(&format!("{}|s{}", table.describe(g.color(x)).unwrap(), i));
    }
    for v in 0..n {
        if in_s[v] {
            continue;
        }
        let pattern: String = s.iter().map(|&x| if g.has_edge(v, x) { '1' } else { '0' }).collect();
        colors[v] = table.intern(&format!("{}|a{}", table.describe(g.color(v)).unwrap(), pattern));
    }
    Ok(g.with_colors(colors))
}

/// Per-vertex valence `min(|N(v) ∩ C \ {v}|, |C \ (N(v) ∪ {v})|)` maximized
/// over the given classes, restricted to vertices in `active`.
fn valence_over(g: &ColoredGraph, classes: &[Vec<usize>], active: &[bool]) -> usize {
    let masks: Vec<Vec<u64>> = classes.iter().map(|c| g.mask_of(c.iter().copied())).collect();
    let mut best = 0;
    for v in 0..g.n() {
        if !active[v] {
            continue;
        }
        for (class, mask) in classes.iter().zip(&masks) {
            let nb = g.degree_into(v, mask);
            let own = usize::from(g.color(v) == g.color(class[0]));
            let non = class.len() - nb - own;
            best = best.max(nb.min(non));
        }
    }
    best
}

/// Color valence of the graph's own coloring.
pub fn color_valence(g: &ColoredGraph) -> usize {
    let classes: Vec<Vec<usize>> = g.color_classes().into_values().collect();
    valence_over(g, &classes, &vec![true; g.n()])
}

/// Deletes all classes of size at most `k` once, then checks that every
/// remaining vertex has valence at most `k` towards every remaining class.
pub fn is_gen_valence_at_most(g: &ColoredGraph, k: usize) -> bool {
    let kept: Vec<Vec<usize>> = g.color_classes().into_values().filter(|c| c.len() > k).collect();
    let mut active = vec![false; g.n()];
    for c in &kept {
        for &v in c {
            active[v] = true;
        }
    }
    valence_over(g, &kept, &active) <= k
}

/// Least `k` for which [`is_gen_valence_at_most`] holds.
pub fn min_gen_valence(g: &ColoredGraph) -> usize {
    (0..=g.n()).find(|&k| is_gen_valence_at_most(g, k)).unwrap_or(g.n())
}
