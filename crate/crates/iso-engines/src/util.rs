use std::collections::BTreeMap;

use graph_core::ColoredGraph;

/// Least color id above every color used by the graphs.
pub(crate) fn fresh_color(graphs: &[&ColoredGraph]) -> u32 {
    graphs.iter().filter_map(|g| g.max_color()).max().map_or(0, |m| m + 1)
}

/// `g` with `s[i]` recolored to `fresh + i`.
pub(crate) fn individualized(g: &ColoredGraph, s: &[usize], fresh: u32) -> ColoredGraph {
    let mut h = g.clone();
    for (i, &v) in s.iter().enumerate() {
        h.set_color(v, fresh + i as u32);
    }
    h
}

/// Class sizes keyed by color.
pub(crate) fn class_sizes(colors: &[u32]) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for &c in colors {
        *m.entry(c).or_insert(0) += 1;
    }
    m
}

/// A kept vertex and kept class witnessing that the generalized color
/// valence exceeds `k`.
pub(crate) fn valence_violation(g: &ColoredGraph, k: usize) -> Option<(usize, u32)> {
    let kept: Vec<(u32, Vec<usize>)> = g.color_classes().into_iter().filter(|(_, c)| c.len() > k).collect();
    let masks: Vec<Vec<u64>> = kept.iter().map(|(_, c)| g.mask_of(c.iter().copied())).collect();
    for (_, class) in &kept {
        for &v in class {
            for ((col, other), mask) in kept.iter().zip(&masks) {
                let nb = g.degree_into(v, mask);
                let own = usize::from(g.color(v) == *col);
                if nb.min(other.len() - nb - own) > k {
                    return Some((v, *col));
                }
            }
        }
    }
    None
}

/// Ordered tuples of `k` distinct vertices below `n`, in lexicographic order.
pub(crate) struct Tuples {
    n: usize,
    cur: Vec<usize>,
    started: bool,
    done: bool,
}

impl Tuples {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Tuples { n, cur: vec![0; k], started: false, done: k > n }
    }

    /// Smallest valid completion of `cur[..i]` from value `from` at position `i`.
    fn fill(&mut self, i: usize, from: usize) -> bool {
        if i == self.cur.len() {
            return true;
        }
        for x in from..self.n {
            if self.cur[..i].contains(&x) {
                continue;
            }
            self.cur[i] = x;
            if self.fill(i + 1, 0) {
                return true;
            }
        }
        false
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.fill(0, 0) {
                self.done = true;
                return None;
            }
            return Some(self.cur.clone());
        }
        let k = self.cur.len();
        for i in (0..k).rev() {
            let from = self.cur[i] + 1;
            if self.fill(i, from) {
                return Some(self.cur.clone());
            }
        }
        self.done = true;
        None
    }
}

/// Subsets of size `k` of `0..n` as increasing vectors, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}
