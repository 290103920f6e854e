//! Graphs without an induced double star and without large cliques.

use graph_core::family::{biclique, complete};
use graph_core::{contains_induced, disjoint_union, is_in_class, Budget, ColoredGraph};
use permgroup::{ir_iso_with, IrOptions};
use refinement::{joint_refine, min_gen_valence, refined_graph};

use crate::util::{class_sizes, fresh_color, individualized, subsets, valence_violation, Tuples};
use crate::valence::gen_color_valence_iso_with;
use crate::{Decision, IsoError, SolverOptions};

/// `K_{1,s} ∪ K_{1,s}`.
pub fn double_star(s: usize) -> ColoredGraph {
    disjoint_union(&biclique(1, s), &biclique(1, s))
}

pub fn double_star_kt_iso(g1: &ColoredGraph, g2: &ColoredGraph, s: usize, t: usize) -> Result<bool, IsoError> {
    let budget = Budget::unlimited();
    Ok(double_star_kt_iso_with(g1, g2, s, t, &SolverOptions::new(&budget))?.iso)
}

pub(crate) fn check_class(g: &ColoredGraph, forbidden: &[(String, ColoredGraph)], which: &str) -> Result<(), IsoError> {
    let plain = g.uncolored();
    for (name, h) in forbidden {
        if !is_in_class(&plain, std::slice::from_ref(h)) {
            return Err(IsoError::NotInClass(format!("{which} graph contains {name}")));
        }
    }
    Ok(())
}

pub(crate) fn same_shape(g1: &ColoredGraph, g2: &ColoredGraph) -> bool {
    g1.n() == g2.n() && g1.edge_count() == g2.edge_count() && class_sizes(g1.colors()) == class_sizes(g2.colors())
}

/// Isomorphism of `(K_{1,s} ∪ K_{1,s}, K_t)`-free graphs.
///
/// A set `S` of at most `max_individualized` vertices of the first graph is
/// chosen whose individualization and refinement gives the least generalized
/// color valence, accepting the first size at which the valence is within
/// the target. All ordered images of `S` in the second graph are then tried
/// with the generalized valence test.
pub fn double_star_kt_iso_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    s: usize,
    t: usize,
    opts: &SolverOptions<'_>,
) -> Result<Decision, IsoError> {
    let forbidden = vec![(format!("K_{{1,{s}}} ∪ K_{{1,{s}}}"), double_star(s)), (format!("K_{t}"), complete(t))];
    check_class(g1, &forbidden, "first")?;
    check_class(g2, &forbidden, "second")?;
    let decided = |iso: bool, route: &str| Ok(Decision { iso, route: route.to_string() });
    if !same_shape(g1, g2) {
        return decided(false, "shape");
    }
    let budget = opts.budget;
    let star = biclique(1, s);
    let star1 = contains_induced(&star, &g1.uncolored()).is_some();
    let star2 = contains_induced(&star, &g2.uncolored()).is_some();
    if !star1 || !star2 {
        if star1 != star2 {
            return decided(false, "bounded-degree");
        }
        let c = min_gen_valence(&refined_graph(g1));
        if valence_violation(&refined_graph(g2), c).is_some() {
            return decided(false, "bounded-degree");
        }
        return decided(gen_color_valence_iso_with(g1, g2, c, budget)?, "bounded-degree");
    }

    let target = opts.valence_target.unwrap_or(2 * s);
    let n = g1.n();
    let fresh = fresh_color(&[g1, g2]);
    let mut chosen: Option<(usize, Vec<usize>)> = None;
    for d in 0..=opts.max_individualized.min(n) {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for set in subsets(n, d) {
            budget.tick()?;
            let k = min_gen_valence(&refined_graph(&individualized(g1, &set, fresh)));
            if best.as_ref().is_none_or(|b| k < b.0) {
                best = Some((k, set));
            }
        }
        if let Some(b) = best.filter(|b| b.0 <= target) {
            chosen = Some(b);
            break;
        }
    }
    let Some((c, set)) = chosen else {
        log::warn!(
            "no individualization set of size <= {} reaches valence {target}; using the general search",
            opts.max_individualized
        );
        let iso = ir_iso_with(g1, g2, &IrOptions { budget: Some(budget), ..Default::default() })?.is_some();
        return decided(iso, "ir-fallback");
    };
    let route = format!("individualize {} (valence {c})", set.len());
    log::info!("double star solver: {route}");
    let h1 = individualized(g1, &set, fresh);
    for img in Tuples::new(n, set.len()) {
        budget.tick()?;
        let h2 = individualized(g2, &img, fresh);
        let (r1, r2) = joint_refine(&h1, &h2);
        if class_sizes(&r1.colors) != class_sizes(&r2.colors) {
            continue;
        }
        if valence_violation(&refined_graph(&h2), c).is_some() {
            continue;
        }
        if gen_color_valence_iso_with(&h1, &h2, c, budget)? {
            return decided(true, &route);
        }
    }
    decided(false, &route)
}
