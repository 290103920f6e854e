//! Bounded and generalized color valence.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use graph_core::{disjoint_union, Budget, ColoredGraph};
use moddecomp::degree_dependence_modules;
use permgroup::ir::{search, Certificate};
use permgroup::{
    ir_iso_with, is_isomorphism, subgroup_search_partial, IrOptions, Permutation, PermutationGroup, TargetCell,
};
use refinement::{color_valence, joint_refine, refine_colors, refined_graph};

use crate::util::{class_sizes, fresh_color, individualized, valence_violation};
use crate::IsoError;

/// Isomorphism of graphs whose joint refinement has color valence at most `c`.
pub fn bounded_color_valence_iso(g1: &ColoredGraph, g2: &ColoredGraph, c: usize) -> Result<bool, IsoError> {
    Ok(bounded_color_valence_iso_with(g1, g2, c, &Budget::unlimited())?.is_some())
}

/// Witnessing variant of [`bounded_color_valence_iso`]. The search
/// individualizes in the lowest non-singleton class first, so classes are
/// processed in the canonical order of their refined colors.
pub fn bounded_color_valence_iso_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    c: usize,
    budget: &Budget,
) -> Result<Option<Permutation>, IsoError> {
    let (s1, s2) = joint_refine(g1, g2);
    let r1 = g1.with_colors(s1.colors);
    let r2 = g2.with_colors(s2.colors);
    for (name, r) in [("first", &r1), ("second", &r2)] {
        let v = color_valence(r);
        if v > c {
            return Err(IsoError::Precondition(format!("{name} graph has color valence {v} > {c} after refinement")));
        }
    }
    let opts = IrOptions { target: TargetCell::FirstNonSingleton, budget: Some(budget) };
    Ok(ir_iso_with(&r1, &r2, &opts)?)
}

pub fn gen_color_valence_aut(g: &ColoredGraph, c: usize) -> Result<PermutationGroup, IsoError> {
    gen_color_valence_aut_with(g, c, &Budget::unlimited())
}

/// Module-plus-`U` subgraphs and their keys under partial maps of `U`.
struct Ctx<'a> {
    r: &'a ColoredGraph,
    u: &'a [usize],
    modules: &'a [Vec<usize>],
    fresh: u32,
    budget: &'a Budget,
    domain: RefCell<HashMap<Vec<usize>, Vec<Certificate>>>,
    failed: Cell<bool>,
}

impl Ctx<'_> {
    /// `G[M ∪ U]` with `pts[i]` recolored `fresh + i`, and the local index of
    /// every vertex.
    fn piece(&self, m: &[usize], pts: &[usize]) -> (ColoredGraph, Vec<usize>) {
        let verts: Vec<usize> = m.iter().chain(self.u).copied().collect();
        let mut h = self.r.induced(&verts);
        for (i, &p) in pts.iter().enumerate() {
            let local = verts.iter().position(|&x| x == p).expect("point lies in U");
            h.set_color(local, self.fresh + i as u32);
        }
        (h, verts)
    }

    fn key(&self, m: &[usize], pts: &[usize]) -> Option<Certificate> {
        let (h, _) = self.piece(m, pts);
        match search(&h, &IrOptions { target: TargetCell::FirstSmallest, budget: Some(self.budget) }) {
            Ok(out) => Some(out.canonical.certificate),
            Err(_) => {
                self.failed.set(true);
                None
            }
        }
    }

    fn keys(&self, pts: &[usize]) -> Option<Vec<Certificate>> {
        let mut ks = Vec::with_capacity(self.modules.len());
        for m in self.modules {
            ks.push(self.key(m, pts)?);
        }
        ks.sort();
        Some(ks)
    }

    /// Whether the map `dom[i] -> img[i]` of points of `U` extends to an
    /// isomorphism of every module-plus-`U` graph onto some other one, by a
    /// bijection of the modules.
    fn compatible(&self, dom: &[usize], img: &[usize]) -> bool {
        if self.failed.get() {
            return false;
        }
        for i in 0..dom.len() {
            if self.r.color(dom[i]) != self.r.color(img[i]) {
                return false;
            }
            for j in i + 1..dom.len() {
                if self.r.has_edge(dom[i], dom[j]) != self.r.has_edge(img[i], img[j]) {
                    return false;
                }
            }
        }
        if self.modules.is_empty() {
            return true;
        }
        let cached = self.domain.borrow().get(dom).cloned();
        let d = match cached {
            Some(d) => d,
            None => match self.keys(dom) {
                Some(d) => {
                    self.domain.borrow_mut().insert(dom.to_vec(), d.clone());
                    d
                }
                None => return false,
            },
        };
        self.keys(img).is_some_and(|k| k == d)
    }

    /// Automorphism of the refined graph that acts as `psi` on `U` and maps
    /// modules onto modules.
    fn lift(&self, psi: &Permutation) -> Result<Permutation, IsoError> {
        let n = self.r.n();
        let img: Vec<usize> = self.u.iter().map(|&x| psi.apply(x)).collect();
        let mut map: Vec<usize> = (0..n).collect();
        for &x in self.u {
            map[x] = psi.apply(x);
        }
        let mut used = vec![false; self.modules.len()];
        let opts = IrOptions { target: TargetCell::FirstSmallest, budget: Some(self.budget) };
        for m in self.modules {
            let (from, _) = self.piece(m, self.u);
            let mut placed = false;
            for (b, m2) in self.modules.iter().enumerate() {
                if used[b] || m2.len() != m.len() {
                    continue;
                }
                let (to, verts) = self.piece(m2, &img);
                if let Some(iso) = ir_iso_with(&from, &to, &opts)? {
                    for (i, &x) in m.iter().enumerate() {
                        map[x] = verts[iso.apply(i)];
                    }
                    used[b] = true;
                    placed = true;
                    break;
                }
            }
            if !placed {
                return Err(IsoError::Internal(format!("no module image for {m:?} under {psi}")));
            }
        }
        let sigma = Permutation::from_images(map).map_err(|e| IsoError::Internal(e.to_string()))?;
        if !is_isomorphism(self.r, self.r, &sigma) {
            return Err(IsoError::Internal(format!("assembled module map {sigma} is not an automorphism")));
        }
        Ok(sigma)
    }
}

fn symmetric_generators(n: usize, class: &[usize]) -> Vec<Permutation> {
    if class.len() < 2 {
        return Vec::new();
    }
    let swap = Permutation::from_cycles(n, &[&class[..2]]).expect("points in range");
    let cycle = Permutation::from_cycles(n, &[class]).expect("points in range");
    vec![swap, cycle]
}

/// Automorphism group of a graph whose refinement has generalized color
/// valence at most `c`.
///
/// Classes of size at most `2c` form `U`; the rest splits into minimal
/// `c`-degree dependence modules. The group induced on `U` is computed class
/// by class by backtracking over the previous group times the symmetric
/// group of the next class, keeping maps under which the module-plus-`U`
/// graphs can be matched up. Its generators are lifted module by module and
/// combined with the pointwise stabilizer of `U`.
pub fn gen_color_valence_aut_with(g: &ColoredGraph, c: usize, budget: &Budget) -> Result<PermutationGroup, IsoError> {
    let r = refined_graph(g);
    if let Some((v, col)) = valence_violation(&r, c) {
        return Err(IsoError::Precondition(format!(
            "vertex {v} has valence above {c} towards refined class {col}"
        )));
    }
    let n = r.n();
    let small: Vec<Vec<usize>> = r.color_classes().into_values().filter(|cl| cl.len() <= 2 * c).collect();
    let u: Vec<usize> = small.concat();
    let mut in_u = vec![false; n];
    for &x in &u {
        in_u[x] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !in_u[v]).collect();
    let modules: Vec<Vec<usize>> = if rest.is_empty() {
        Vec::new()
    } else {
        let fam = degree_dependence_modules(&r.induced(&rest), c)?;
        fam.modules.iter().map(|m| m.iter().map(|&i| rest[i]).collect()).collect()
    };
    log::debug!("gcv aut: n={n} |U|={} modules={}", u.len(), modules.len());
    let ctx = Ctx {
        r: &r,
        u: &u,
        modules: &modules,
        fresh: fresh_color(&[&r]),
        budget,
        domain: RefCell::new(HashMap::new()),
        failed: Cell::new(false),
    };

    let mut s: Vec<usize> = Vec::new();
    let mut aut_s: Vec<Permutation> = Vec::new();
    for class in &small {
        let mut prefix = s.clone();
        prefix.extend_from_slice(class);
        let mut gens = aut_s.clone();
        gens.extend(symmetric_generators(n, class));
        let cand = PermutationGroup::with_base_prefix(n, &gens, &prefix).expect("points in range");
        let base = cand.base();
        let found = subgroup_search_partial(
            &cand,
            |img: &[usize]| ctx.compatible(&base[..img.len()], img),
            |p: &Permutation| {
                let img: Vec<usize> = prefix.iter().map(|&x| p.apply(x)).collect();
                ctx.compatible(&prefix, &img)
            },
            budget,
        )?;
        if ctx.failed.get() {
            return Err(IsoError::Budget);
        }
        aut_s = found.generators().to_vec();
        s = prefix;
    }

    let mut all: Vec<Permutation> = Vec::with_capacity(aut_s.len());
    for psi in &aut_s {
        all.push(ctx.lift(psi)?);
    }
    let pinned = individualized(&r, &u, ctx.fresh);
    let kernel = search(&pinned, &IrOptions { target: TargetCell::FirstSmallest, budget: Some(budget) })?.group;
    all.extend(kernel.generators().iter().cloned());
    Ok(PermutationGroup::from_generators(n, &all).expect("degrees agree"))
}

/// The graph whose automorphisms swapping the two apexes are exactly the
/// isomorphisms of the inputs.
#[derive(Clone, Debug)]
pub struct CombinedGraph {
    pub graph: ColoredGraph,
    pub apex1: usize,
    pub apex2: usize,
    /// Bound on its generalized color valence.
    pub bound: usize,
}

/// Both inputs plus an apex each, jointly refined; between class pairs that
/// are larger than `c'` on each side and where some side has more than `c'`
/// neighbors in the other, all edges across the two copies are added. Here
/// `c' = max(c, 1)`. `None` when the refined class sizes differ.
pub fn gcv_combined_graph(g1: &ColoredGraph, g2: &ColoredGraph, c: usize) -> Option<CombinedGraph> {
    let cc = c.max(1);
    let n1 = g1.n();
    let fresh = fresh_color(&[g1, g2]);
    let add_apex = |g: &ColoredGraph| {
        let mut h = disjoint_union(g, &ColoredGraph::empty(1));
        let a = g.n();
        h.set_color(a, fresh);
        for v in 0..a {
            h.add_edge(a, v);
        }
        h
    };
    let h = disjoint_union(&add_apex(g1), &add_apex(g2));
    let apex1 = n1;
    let apex2 = h.n() - 1;
    let (colors, _) = refine_colors(&h, h.colors());
    let side1 = &colors[..=n1];
    let side2 = &colors[n1 + 1..];
    let sizes = class_sizes(side1);
    if sizes != class_sizes(side2) {
        return None;
    }
    let mut h = h.with_colors(colors.clone());
    let big: Vec<(u32, Vec<usize>, Vec<usize>)> = sizes
        .iter()
        .filter(|(_, &k)| k > cc)
        .map(|(&col, _)| {
            let a = (0..=n1).filter(|&v| colors[v] == col).collect();
            let b = (n1 + 1..h.n()).filter(|&v| colors[v] == col).collect();
            (col, a, b)
        })
        .collect();
    let masks: Vec<Vec<u64>> = big.iter().map(|(_, a, _)| h.mask_of(a.iter().copied())).collect();
    let mut cross = Vec::new();
    for (i, (_, a, _)) in big.iter().enumerate() {
        for (j, (_, a2, _)) in big.iter().enumerate().skip(i) {
            let d = h.degree_into(a[0], &masks[j]);
            let d2 = h.degree_into(a2[0], &masks[i]);
            if d > cc || d2 > cc {
                cross.push((i, j));
            }
        }
    }
    for (i, j) in cross {
        let (_, a, b) = &big[i];
        let (_, a2, b2) = &big[j];
        for &x in a {
            for &y in b2 {
                h.add_edge(x, y);
            }
        }
        if i != j {
            for &x in b {
                for &y in a2 {
                    h.add_edge(x, y);
                }
            }
        }
    }
    Some(CombinedGraph { graph: h, apex1, apex2, bound: 2 * cc })
}

pub fn gen_color_valence_iso(g1: &ColoredGraph, g2: &ColoredGraph, c: usize) -> Result<bool, IsoError> {
    gen_color_valence_iso_with(g1, g2, c, &Budget::unlimited())
}

/// Isomorphism of graphs of generalized color valence at most `c`, decided
/// by looking for an automorphism of the combined graph that swaps the apexes.
pub fn gen_color_valence_iso_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    c: usize,
    budget: &Budget,
) -> Result<bool, IsoError> {
    for (name, g) in [("first", g1), ("second", g2)] {
        if let Some((v, col)) = valence_violation(&refined_graph(g), c) {
            return Err(IsoError::Precondition(format!(
                "{name} graph: vertex {v} has valence above {c} towards refined class {col}"
            )));
        }
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let Some(comb) = gcv_combined_graph(g1, g2, c) else {
        return Ok(false);
    };
    if let Some((v, col)) = valence_violation(&comb.graph, comb.bound) {
        return Err(IsoError::Internal(format!(
            "combined graph exceeds generalized valence {} at vertex {v}, class {col}",
            comb.bound
        )));
    }
    let group = gen_color_valence_aut_with(&comb.graph, comb.bound, budget)?;
    Ok(group.orbit(comb.apex1).binary_search(&comb.apex2).is_ok())
}
