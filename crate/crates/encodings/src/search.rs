use graph_core::{Budget, BudgetExhausted, ColoredGraph};

use crate::Encoding;

/// Whether `phi` satisfies both budget conditions of `enc` on `g`.
pub fn is_encoding_map(g: &ColoredGraph, enc: &Encoding, phi: &[usize]) -> bool {
    let k = enc.k();
    if phi.len() != g.n() || phi.iter().any(|&x| x >= k) {
        return false;
    }
    (0..g.n()).all(|v| {
        let mut cnt = vec![0usize; k];
        for u in (0..g.n()).filter(|&u| u != v) {
            if enc.is_exception(phi[v], phi[u], g.has_edge(u, v)) {
                cnt[phi[u]] += 1;
            }
        }
        (0..k).all(|j| enc.ln(phi[v], j).allows(cnt[j]))
    })
}

/// Result of an exhaustive encoding search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncodingSearch {
    pub map: Option<Vec<usize>>,
    /// Search nodes visited; with no map this certifies exhaustion.
    pub nodes: u64,
}

pub fn find_encoding_map(g: &ColoredGraph, enc: &Encoding) -> EncodingSearch {
    find_encoding_map_with(g, enc, &Budget::unlimited()).expect("unlimited budget")
}

/// Backtracking search for an encoding map, assigning vertices in order of
/// decreasing degree and pruning as soon as some exception count exceeds
/// its budget.
pub fn find_encoding_map_with(
    g: &ColoredGraph,
    enc: &Encoding,
    budget: &Budget,
) -> Result<EncodingSearch, BudgetExhausted> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let labels: Vec<usize> = (0..enc.k()).collect();
    let mut found = None;
    let nodes = enumerate_maps(g, enc, &order, &labels, None, &[], budget, &mut |phi| {
        found = Some(phi.to_vec());
        Ok(true)
    })?;
    Ok(EncodingSearch { map: found, nodes })
}

/// Whether no graph encoded by `enc` contains `h` as an induced subgraph,
/// i.e. whether `h` itself cannot be encoded.
pub fn class_excludes(enc: &Encoding, h: &ColoredGraph) -> bool {
    find_encoding_map(h, enc).map.is_none()
}

/// Partial assignment with per-(vertex, label) exception counts.
struct State<'a> {
    g: &'a ColoredGraph,
    enc: &'a Encoding,
    phi: Vec<usize>,
    cnt: Vec<u32>,
    assigned: Vec<usize>,
    log: Vec<Vec<usize>>,
}

const UNSET: usize = usize::MAX;

impl<'a> State<'a> {
    fn new(g: &'a ColoredGraph, enc: &'a Encoding) -> Self {
        State {
            g,
            enc,
            phi: vec![UNSET; g.n()],
            cnt: vec![0; g.n() * enc.k()],
            assigned: Vec::new(),
            log: Vec::new(),
        }
    }

    fn assign(&mut self, u: usize, x: usize) -> bool {
        let k = self.enc.k();
        let mut touched = Vec::new();
        let mut ok = true;
        for &v in &self.assigned {
            let a = self.phi[v];
            let adj = self.g.has_edge(u, v);
            if self.enc.is_exception(a, x, adj) {
                let i = v * k + x;
                self.cnt[i] += 1;
                touched.push(i);
                if !self.enc.ln(a, x).allows(self.cnt[i] as usize) {
                    ok = false;
                    break;
                }
            }
            if self.enc.is_exception(x, a, adj) {
                let i = u * k + a;
                self.cnt[i] += 1;
                touched.push(i);
                if !self.enc.ln(x, a).allows(self.cnt[i] as usize) {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            for i in touched {
                self.cnt[i] -= 1;
            }
            return false;
        }
        self.phi[u] = x;
        self.assigned.push(u);
        self.log.push(touched);
        true
    }

    fn undo(&mut self) {
        let u = self.assigned.pop().expect("nonempty");
        for i in self.log.pop().expect("nonempty") {
            self.cnt[i] -= 1;
        }
        self.phi[u] = UNSET;
    }
}

/// Enumerates encoding maps of `g` using only `labels`, with `fixed`
/// assignments made first and `order` giving the remaining vertices.
/// `caps[x]` bounds the number of vertices labeled `x`. `leaf` returns
/// `true` to stop. Returns the number of nodes visited.
#[allow(clippy::too_many_arguments)]
pub(crate) fn enumerate_maps<E: From<BudgetExhausted>>(
    g: &ColoredGraph,
    enc: &Encoding,
    order: &[usize],
    labels: &[usize],
    caps: Option<&[usize]>,
    fixed: &[(usize, usize)],
    budget: &Budget,
    leaf: &mut dyn FnMut(&[usize]) -> Result<bool, E>,
) -> Result<u64, E> {
    let mut st = State::new(g, enc);
    let mut used = vec![0usize; enc.k()];
    for &(v, x) in fixed {
        if !st.assign(v, x) {
            return Ok(1);
        }
        used[x] += 1;
    }
    let rest: Vec<usize> = order.iter().copied().filter(|&v| st.phi[v] == UNSET).collect();
    let mut nodes = 0u64;
    dfs(&mut st, &rest, 0, labels, caps, &mut used, budget, &mut nodes, leaf)?;
    Ok(nodes)
}

#[allow(clippy::too_many_arguments)]
fn dfs<E: From<BudgetExhausted>>(
    st: &mut State<'_>,
    rest: &[usize],
    pos: usize,
    labels: &[usize],
    caps: Option<&[usize]>,
    used: &mut [usize],
    budget: &Budget,
    nodes: &mut u64,
    leaf: &mut dyn FnMut(&[usize]) -> Result<bool, E>,
) -> Result<bool, E> {
    *nodes += 1;
    budget.tick()?;
    if pos == rest.len() {
        return leaf(&st.phi);
    }
    let u = rest[pos];
    for &x in labels {
        if caps.is_some_and(|c| used[x] >= c[x]) {
            continue;
        }
        if st.assign(u, x) {
            used[x] += 1;
            let stop = dfs(st, rest, pos + 1, labels, caps, used, budget, nodes, leaf)?;
            used[x] -= 1;
            st.undo();
            if stop {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
