//! `(P5, K_t)`-free graphs.

use graph_core::family::{complete, path};
use graph_core::{Budget, ColorTable, ColoredGraph};
use moddecomp::{is_colored_module, quotient, KeepOne, ModuleFamily};
use refinement::{color_valence, joint_refine, refine_by_adjacency};

use crate::dstar::{check_class, same_shape};
use crate::session::InvariantSession;
use crate::util::{class_sizes, subsets, Tuples};
use crate::valence::bounded_color_valence_iso_with;
use crate::{Decision, IsoError, SolverOptions};

pub fn p5_kt_iso(g1: &ColoredGraph, g2: &ColoredGraph, t: usize) -> Result<bool, IsoError> {
    let budget = Budget::unlimited();
    Ok(p5_kt_iso_with(g1, g2, t, &SolverOptions::new(&budget))?.iso)
}

/// Isomorphism of `(P5, K_t)`-free graphs.
///
/// Disconnected graphs are compared component by component. A connected
/// graph is refined by adjacency towards a dominating set `S` chosen so that
/// the components of every color class are modules; these are
/// `K_{t-1}`-free and are compared recursively through an invariant session.
/// Each module is replaced by one vertex carrying its invariant, and the
/// quotients are compared with the bounded color valence test. All ordered
/// candidates for the image of `S` are tried.
pub fn p5_kt_iso_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    t: usize,
    opts: &SolverOptions<'_>,
) -> Result<Decision, IsoError> {
    let forbidden = vec![("P_5".to_string(), path(5)), (format!("K_{t}"), complete(t))];
    check_class(g1, &forbidden, "first")?;
    check_class(g2, &forbidden, "second")?;
    let iso = equiv(g1, g2, t, opts)?;
    Ok(Decision { iso, route: format!("dominating-set modules, depth {t}") })
}

/// Default bound on the dominating set size.
fn default_cap(t: usize) -> usize {
    t * 3.max(t.saturating_sub(1))
}

fn equiv(g1: &ColoredGraph, g2: &ColoredGraph, t: usize, opts: &SolverOptions<'_>) -> Result<bool, IsoError> {
    opts.budget.tick()?;
    if !same_shape(g1, g2) {
        return Ok(false);
    }
    if g1.n() == 0 || g1.edge_count() == 0 {
        return Ok(true);
    }
    let (c1, c2) = (g1.is_connected(), g2.is_connected());
    if c1 != c2 {
        return Ok(false);
    }
    if !c1 {
        return match_components(g1, g2, t, opts);
    }
    let n = g1.n();
    let mut table = ColorTable::new();
    if let Some(m) = g1.max_color().max(g2.max_color()) {
        table.reserve_through(m);
    }
    let mut session =
        InvariantSession::new(|a: &ColoredGraph, b: &ColoredGraph| equiv(a, b, t.saturating_sub(1), opts));
    let cap = opts.max_dominating.unwrap_or_else(|| default_cap(t)).min(n);
    let mut found = None;
    'sizes: for k in 1..=cap {
        for set in subsets(n, k) {
            opts.budget.tick()?;
            if let Some(parts) = split(g1, &set, &mut table)? {
                found = Some((set, parts));
                break 'sizes;
            }
        }
    }
    let Some((set, (h1, fam1))) = found else {
        log::warn!("no suitable dominating set of size <= {cap}");
        return Err(IsoError::Budget);
    };
    let q1 = replace_modules(&h1, &fam1, &mut session, &mut table)?;
    let sizes1 = class_sizes(h1.colors());
    for img in Tuples::new(n, set.len()) {
        opts.budget.tick()?;
        if !dominates(g2, &img) {
            continue;
        }
        let h2 = refine_by_adjacency(g2, &img, &mut table).expect("valid distinct vertices");
        if class_sizes(h2.colors()) != sizes1 {
            continue;
        }
        let Some(fam2) = class_component_modules(&h2) else {
            continue;
        };
        if fam2.modules.len() != fam1.modules.len() {
            continue;
        }
        let q2 = replace_modules(&h2, &fam2, &mut session, &mut table)?;
        if !same_shape(&q1, &q2) {
            continue;
        }
        let (r1, r2) = joint_refine(&q1, &q2);
        let c = color_valence(&q1.with_colors(r1.colors)).max(color_valence(&q2.with_colors(r2.colors)));
        if bounded_color_valence_iso_with(&q1, &q2, c, opts.budget)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn match_components(g1: &ColoredGraph, g2: &ColoredGraph, t: usize, opts: &SolverOptions<'_>) -> Result<bool, IsoError> {
    let parts1: Vec<ColoredGraph> = g1.components().iter().map(|c| g1.induced(c)).collect();
    let parts2: Vec<ColoredGraph> = g2.components().iter().map(|c| g2.induced(c)).collect();
    if parts1.len() != parts2.len() {
        return Ok(false);
    }
    let mut used = vec![false; parts2.len()];
    for a in &parts1 {
        let mut hit = false;
        for (j, b) in parts2.iter().enumerate() {
            if !used[j] && equiv(a, b, t, opts)? {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

fn dominates(g: &ColoredGraph, set: &[usize]) -> bool {
    let mut hit = g.mask_of(set.iter().copied());
    for &x in set {
        for (h, r) in hit.iter_mut().zip(g.row(x)) {
            *h |= r;
        }
    }
    (0..g.n()).all(|v| hit[v / 64] >> (v % 64) & 1 == 1)
}

/// Components of the color classes, if all of them are modules.
fn class_component_modules(h: &ColoredGraph) -> Option<ModuleFamily> {
    let mut modules = Vec::new();
    for class in h.color_classes().into_values() {
        let sub = h.induced(&class);
        for comp in sub.components() {
            let m: Vec<usize> = comp.iter().map(|&i| class[i]).collect();
            if !is_colored_module(h, &m) {
                return None;
            }
            modules.push(m);
        }
    }
    Some(ModuleFamily::new(h, modules))
}

/// Refinement by adjacency towards `set` and its module family, when `set`
/// dominates and the class components are modules.
fn split(
    g: &ColoredGraph,
    set: &[usize],
    table: &mut ColorTable,
) -> Result<Option<(ColoredGraph, ModuleFamily)>, IsoError> {
    if !dominates(g, set) {
        return Ok(None);
    }
    let h = refine_by_adjacency(g, set, table).expect("valid distinct vertices");
    Ok(class_component_modules(&h).map(|fam| (h, fam)))
}

fn replace_modules(
    h: &ColoredGraph,
    fam: &ModuleFamily,
    session: &mut InvariantSession<'_>,
    table: &mut ColorTable,
) -> Result<ColoredGraph, IsoError> {
    let mut invs = Vec::with_capacity(fam.modules.len());
    for (m, &nontrivial) in fam.modules.iter().zip(&fam.nontrivial) {
        invs.push(if nontrivial { Some(session.query(&h.induced(m))?) } else { None });
    }
    Ok(quotient(h, fam, &KeepOne, &invs, table)?)
}
