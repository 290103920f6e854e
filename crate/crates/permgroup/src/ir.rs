//! Individualization-refinement search: canonical labeling, automorphism
//! groups and isomorphism cosets of colored graphs.
//!
//! Each node of the search tree is an ordered partition, stored as canonical
//! color ids produced by [`refinement::Refiner`]. A child individualizes one
//! vertex of the target cell, which becomes the last part of that cell, and
//! refines again. Leaves are discrete partitions; a leaf is keyed by the
//! traces of its path and the relabeled graph. The canonical leaf is the
//! greatest key; equal relabeled graphs yield automorphisms.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use graph_core::{Budget, BudgetExhausted, ColoredGraph};
use refinement::Refiner;

use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Which non-singleton cell a node branches on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TargetCell {
    /// Smallest non-singleton cell, lowest color id on ties.
    #[default]
    FirstSmallest,
    /// Non-singleton cell with the lowest color id.
    FirstNonSingleton,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct IrOptions<'a> {
    pub target: TargetCell,
    pub budget: Option<&'a Budget>,
}

/// The relabeled graph of a leaf: colors and packed adjacency rows in
/// position order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub n: usize,
    pub colors: Vec<u32>,
    pub rows: Vec<u64>,
}

impl Certificate {
    fn build(g: &ColoredGraph, lab: &[usize]) -> Self {
        let n = g.n();
        let words = n.div_ceil(64);
        let mut inv = vec![0; n];
        for (v, &p) in lab.iter().enumerate() {
            inv[p] = v;
        }
        let colors = inv.iter().map(|&v| g.color(v)).collect();
        let mut rows = vec![0u64; n * words];
        for p in 0..n {
            for w in g.neighbors(inv[p]) {
                let q = lab[w];
                rows[p * words + q / 64] |= 1 << (q % 64);
            }
        }
        Certificate { n, colors, rows }
    }

    /// Byte encoding suitable as a hash-map key or invariant value.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + 4 * self.colors.len() + 8 * self.rows.len());
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        for c in &self.colors {
            out.extend_from_slice(&c.to_le_bytes());
        }
        for r in &self.rows {
            out.extend_from_slice(&r.to_le_bytes());
        }
        out
    }

    /// The relabeled graph itself.
    pub fn to_graph(&self) -> ColoredGraph {
        let words = self.n.div_ceil(64);
        let mut g = ColoredGraph::empty(self.n).with_colors(self.colors.clone());
        for p in 0..self.n {
            for q in p + 1..self.n {
                if self.rows[p * words + q / 64] >> (q % 64) & 1 == 1 {
                    g.add_edge(p, q);
                }
            }
        }
        g
    }
}

/// Canonical labeling: `labeling` maps each vertex to its canonical position.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub labeling: Permutation,
    pub certificate: Certificate,
}

/// Result of one full search.
#[derive(Clone, Debug)]
pub struct IrOutcome {
    pub canonical: CanonicalForm,
    pub group: PermutationGroup,
    pub nodes: u64,
}

struct Leaf {
    traces: Vec<u64>,
    cert: Certificate,
    lab: Vec<usize>,
}

enum Flow {
    Continue,
    JumpTo(usize),
}

struct Search<'a> {
    g: &'a ColoredGraph,
    refiner: Refiner,
    target: TargetCell,
    budget: &'a Budget,
    nodes: u64,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    gens: Vec<Permutation>,
}

impl Search<'_> {
    fn trace(&self, colors: &[u32], num: usize) -> u64 {
        let mut size = vec![0usize; num];
        let mut rep = vec![usize::MAX; num];
        for (v, &c) in colors.iter().enumerate() {
            size[c as usize] += 1;
            if rep[c as usize] == usize::MAX {
                rep[c as usize] = v;
            }
        }
        let mut h = DefaultHasher::new();
        num.hash(&mut h);
        let mut sig = Vec::new();
        for c in 0..num {
            size[c].hash(&mut h);
            sig.clear();
            sig.extend(self.refiner.neighbors(rep[c]).iter().map(|&w| colors[w]));
            sig.sort_unstable();
            sig.hash(&mut h);
        }
        h.finish()
    }

    fn target_cell(&self, colors: &[u32], num: usize) -> Vec<usize> {
        let mut size = vec![0usize; num];
        for &c in colors {
            size[c as usize] += 1;
        }
        let pick = match self.target {
            TargetCell::FirstSmallest => (0..num).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c)),
            TargetCell::FirstNonSingleton => (0..num).find(|&c| size[c] > 1),
        }
        .expect("non-discrete partition has a non-singleton cell");
        (0..colors.len()).filter(|&v| colors[v] as usize == pick).collect()
    }

    fn child(&self, colors: &[u32], v: usize) -> (Vec<u32>, usize) {
        let init: Vec<u32> = colors.iter().enumerate().map(|(u, &c)| 2 * c + u32::from(u == v)).collect();
        self.refiner.refine(&init)
    }

    /// Orbit representative of each vertex under generators fixing `prefix`.
    fn orbit_roots(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gen in &self.gens {
            if prefix.iter().any(|&b| gen.apply(b) != b) {
                continue;
            }
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gen.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }

    fn visit(
        &mut self,
        colors: Vec<u32>,
        num: usize,
        prefix: &mut Vec<usize>,
        traces: &mut Vec<u64>,
    ) -> Result<Flow, BudgetExhausted> {
        self.budget.tick()?;
        self.nodes += 1;
        if num == colors.len() {
            return Ok(self.leaf(colors, prefix, traces));
        }
        let depth = prefix.len();
        let cell = self.target_cell(&colors, num);
        let mut explored: Vec<usize> = Vec::new();
        let mut roots: Option<(usize, Vec<usize>)> = None;
        for &w in &cell {
            if !explored.is_empty() && !self.gens.is_empty() {
                if roots.as_ref().map(|r| r.0) != Some(self.gens.len()) {
                    roots = Some((self.gens.len(), self.orbit_roots(prefix)));
                }
                let r = &roots.as_ref().unwrap().1;
                if explored.iter().any(|&x| r[x] == r[w]) {
                    continue;
                }
            }
            let (child, child_num) = self.child(&colors, w);
            let t = self.trace(&child, child_num);
            prefix.push(w);
            traces.push(t);
            let prune = self.first.is_some() && !self.matches_first(traces) && self.below_best(traces);
            let flow = if prune { Flow::Continue } else { self.visit(child, child_num, prefix, traces)? };
            prefix.pop();
            traces.pop();
            explored.push(w);
            if let Flow::JumpTo(l) = flow {
                if l < depth {
                    return Ok(flow);
                }
            }
        }
        Ok(Flow::Continue)
    }

    fn matches_first(&self, traces: &[u64]) -> bool {
        let f = &self.first.as_ref().unwrap().traces;
        f.len() >= traces.len() && f[..traces.len()] == *traces
    }

    fn below_best(&self, traces: &[u64]) -> bool {
        let b = &self.best.as_ref().unwrap().traces;
        for (x, y) in traces.iter().zip(b) {
            match x.cmp(y) {
                Ordering::Less => return true,
                Ordering::Greater => return false,
                Ordering::Equal => {}
            }
        }
        false
    }

    fn leaf(&mut self, colors: Vec<u32>, prefix: &[usize], traces: &[u64]) -> Flow {
        let lab: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let cert = Certificate::build(self.g, &lab);
        let leaf = Leaf { traces: traces.to_vec(), cert, lab };
        let Some(first) = &self.first else {
            self.first_path = prefix.to_vec();
            self.best = Some(Leaf { traces: leaf.traces.clone(), cert: leaf.cert.clone(), lab: leaf.lab.clone() });
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if first.cert == leaf.cert {
            let gen = automorphism(&first.lab, &leaf.lab);
            self.gens.push(gen);
            let l = prefix.iter().zip(&self.first_path).position(|(a, b)| a != b).unwrap_or(prefix.len());
            return Flow::JumpTo(l);
        }
        let best = self.best.as_ref().unwrap();
        if best.cert == leaf.cert {
            let gen = automorphism(&best.lab, &leaf.lab);
            self.gens.push(gen);
            return Flow::Continue;
        }
        if (&leaf.traces, &leaf.cert) > (&best.traces, &best.cert) {
            self.best = Some(leaf);
        }
        Flow::Continue
    }
}

/// `x -> lab_to^{-1}(lab_from(x))`.
fn automorphism(lab_from: &[usize], lab_to: &[usize]) -> Permutation {
    let mut inv = vec![0; lab_to.len()];
    for (v, &p) in lab_to.iter().enumerate() {
        inv[p] = v;
    }
    Permutation::from_images(lab_from.iter().map(|&p| inv[p]).collect()).expect("labelings are bijections")
}

/// Runs the search and returns the canonical form and automorphism group.
pub fn search(g: &ColoredGraph, opts: &IrOptions<'_>) -> Result<IrOutcome, BudgetExhausted> {
    let unlimited = Budget::unlimited();
    let mut s = Search {
        g,
        refiner: Refiner::new(g),
        target: opts.target,
        budget: opts.budget.unwrap_or(&unlimited),
        nodes: 0,
        first: None,
        first_path: Vec::new(),
        best: None,
        gens: Vec::new(),
    };
    let (colors, num) = s.refiner.refine(g.colors());
    let t = s.trace(&colors, num);
    let mut prefix = Vec::new();
    let mut traces = vec![t];
    s.visit(colors, num, &mut prefix, &mut traces)?;
    let best = s.best.take().expect("every search reaches a leaf");
    let group = PermutationGroup::from_base_and_strong_generators(g.n(), &s.first_path, &s.gens)
        .expect("automorphisms have the graph's degree");
    let labeling = Permutation::from_images(best.lab).expect("leaf is discrete");
    Ok(IrOutcome { canonical: CanonicalForm { labeling, certificate: best.cert }, group, nodes: s.nodes })
}

pub fn canonical_form(g: &ColoredGraph) -> CanonicalForm {
    search(g, &IrOptions::default()).expect("unlimited budget").canonical
}

/// Exact color-preserving automorphism group.
pub fn automorphism_group(g: &ColoredGraph) -> PermutationGroup {
    search(g, &IrOptions::default()).expect("unlimited budget").group
}

/// True when `map` (vertex of `g1` to vertex of `g2`) is a color-preserving
/// isomorphism.
pub fn is_isomorphism(g1: &ColoredGraph, g2: &ColoredGraph, map: &Permutation) -> bool {
    let n = g1.n();
    if g2.n() != n || map.degree() != n {
        return false;
    }
    (0..n).all(|v| g1.color(v) == g2.color(map.apply(v)))
        && (0..n).all(|u| (u + 1..n).all(|v| g1.has_edge(u, v) == g2.has_edge(map.apply(u), map.apply(v))))
}

fn quick_reject(g1: &ColoredGraph, g2: &ColoredGraph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return true;
    }
    let mut a = g1.colors().to_vec();
    let mut b = g2.colors().to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a != b
}

/// An isomorphism `g1 -> g2` (colors compared as raw ids) or `None`.
pub fn ir_iso_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    opts: &IrOptions<'_>,
) -> Result<Option<Permutation>, BudgetExhausted> {
    if quick_reject(g1, g2) {
        return Ok(None);
    }
    let c1 = search(g1, opts)?.canonical;
    let c2 = search(g2, opts)?.canonical;
    if c1.certificate != c2.certificate {
        return Ok(None);
    }
    let iso = c1.labeling.compose(&c2.labeling.inverse());
    debug_assert!(is_isomorphism(g1, g2, &iso));
    Ok(Some(iso))
}

pub fn ir_iso(g1: &ColoredGraph, g2: &ColoredGraph) -> Option<Permutation> {
    ir_iso_with(g1, g2, &IrOptions::default()).expect("unlimited budget")
}

/// All isomorphisms `g1 -> g2`: `a` then `representative` for `a` in `group`.
#[derive(Clone, Debug)]
pub struct IsoCoset {
    pub representative: Option<Permutation>,
    /// `Aut(g1)`.
    pub group: PermutationGroup,
}

impl IsoCoset {
    pub fn is_empty(&self) -> bool {
        self.representative.is_none()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        match &self.representative {
            Some(r) => p.degree() == r.degree() && self.group.contains(&p.compose(&r.inverse())),
            None => false,
        }
    }
}

pub fn iso_coset(g1: &ColoredGraph, g2: &ColoredGraph) -> IsoCoset {
    let out = search(g1, &IrOptions::default()).expect("unlimited budget");
    let representative = if quick_reject(g1, g2) {
        None
    } else {
        let c2 = canonical_form(g2);
        (out.canonical.certificate == c2.certificate)
            .then(|| out.canonical.labeling.compose(&c2.labeling.inverse()))
    };
    IsoCoset { representative, group: out.group }
}
