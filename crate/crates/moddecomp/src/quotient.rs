use std::fmt;

use graph_core::{ColorTable, ColoredGraph};

use crate::functor::{DecompositionFunctor, ModuleFamily};
use crate::module::{outside_row, same_outside};
use crate::ModError;

/// Complete-invariant value: a canonical byte string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantValue(pub Vec<u8>);

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Chooses the recolored vertices that stand in for a nontrivial module.
pub trait ReplacementOperator {
    /// Kept vertices of `module` with their new colors.
    fn replace(&self, g: &ColoredGraph, module: &[usize], table: &mut ColorTable)
        -> Result<Vec<(usize, u32)>, ModError>;
}

/// Replaces a module whose members all share one outside adjacency type by
/// its least vertex, recolored with a fixed marker.
#[derive(Clone, Copy, Debug, Default)]
pub struct KeepOne;

/// Color description given to the vertex that replaces a module.
pub const MODULE_MARKER: &str = "M";

impl ReplacementOperator for KeepOne {
    fn replace(
        &self,
        g: &ColoredGraph,
        module: &[usize],
        table: &mut ColorTable,
    ) -> Result<Vec<(usize, u32)>, ModError> {
        let inside = g.mask_of(module.iter().copied());
        if module.windows(2).any(|w| !same_outside(g, w[0], w[1], &inside)) {
            return Err(ModError::Replacement(format!("module {module:?} has several adjacency types")));
        }
        Ok(vec![(module[0], table.intern(MODULE_MARKER))])
    }
}

fn describe(table: &mut ColorTable, id: u32) -> String {
    table.reserve_through(id);
    table.describe(id).unwrap().to_string()
}

/// Replaces every nontrivial module and recolors each surviving vertex by
/// `(color after replacement; sorted colors of module members sharing its
/// adjacency type; module invariant)`. `invariants[i]` belongs to module `i`
/// and is ignored for trivial modules. Quotient vertices keep the order of
/// their original ids.
pub fn quotient(
    g: &ColoredGraph,
    fam: &ModuleFamily,
    rep: &dyn ReplacementOperator,
    invariants: &[Option<InvariantValue>],
    table: &mut ColorTable,
) -> Result<ColoredGraph, ModError> {
    let n = g.n();
    if !fam.is_partition(n) {
        return Err(ModError::NotAPartition);
    }
    if let Some(m) = g.max_color() {
        table.reserve_through(m);
    }
    let mut kept: Vec<(usize, String)> = Vec::new();
    for (i, m) in fam.modules.iter().enumerate() {
        let inside = g.mask_of(m.iter().copied());
        let (survivors, inv_part) = if fam.nontrivial[i] {
            let inv = invariants
                .get(i)
                .and_then(|x| x.as_ref())
                .ok_or_else(|| ModError::Replacement(format!("missing invariant for module {i}")))?;
            let inv_id = table.intern(&format!("inv:{inv}"));
            (rep.replace(g, m, table)?, format!("#{inv_id}"))
        } else {
            (m.iter().map(|&v| (v, g.color(v))).collect(), "-".to_string())
        };
        for (v, chi) in survivors {
            let row = outside_row(g, v, &inside);
            let mut same: Vec<u32> =
                m.iter().filter(|&&x| outside_row(g, x, &inside) == row).map(|&x| g.color(x)).collect();
            same.sort_unstable();
            same.dedup();
            let list: Vec<String> = same.iter().map(|c| c.to_string()).collect();
            let chi_desc = describe(table, chi);
            kept.push((v, format!("({chi_desc};{};{inv_part})", list.join(","))));
        }
    }
    kept.sort();
    let verts: Vec<usize> = kept.iter().map(|k| k.0).collect();
    let colors: Vec<u32> = kept.iter().map(|k| table.intern(&k.1)).collect();
    Ok(g.induced(&verts).with_colors(colors))
}

/// Which sufficient condition for reversibility a decomposition meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReversibilityCase {
    /// At most one nontrivial module.
    OneTrivial,
    /// Every replacement keeps a single vertex.
    Singletons,
    /// Nontrivial modules are connected and pairwise non-adjacent.
    ConnectedNonAdjacent,
    Unknown,
}

pub fn reversibility_case(
    g: &ColoredGraph,
    fam: &ModuleFamily,
    rep: &dyn ReplacementOperator,
) -> ReversibilityCase {
    let nontrivial: Vec<&Vec<usize>> =
        fam.modules.iter().zip(&fam.nontrivial).filter(|(_, &t)| t).map(|(m, _)| m).collect();
    if nontrivial.len() <= 1 {
        return ReversibilityCase::OneTrivial;
    }
    let mut scratch = ColorTable::new();
    if nontrivial.iter().all(|m| rep.replace(g, m, &mut scratch).map(|r| r.len() == 1).unwrap_or(false)) {
        return ReversibilityCase::Singletons;
    }
    let connected = nontrivial.iter().all(|m| g.induced(m).is_connected());
    let separated = nontrivial.iter().enumerate().all(|(i, a)| {
        nontrivial[i + 1..].iter().all(|b| a.iter().all(|&x| b.iter().all(|&y| !g.has_edge(x, y))))
    });
    if connected && separated {
        ReversibilityCase::ConnectedNonAdjacent
    } else {
        ReversibilityCase::Unknown
    }
}

/// Bookkeeping of one recursive invariant computation.
#[derive(Clone, Debug, Default)]
pub struct DecompositionStats {
    /// Calls to the prime invariant.
    pub prime_calls: usize,
    pub max_depth: usize,
    /// One line per visited graph: depth, size, nontrivial module count.
    pub trace: Vec<String>,
}

/// Recursive invariant: decompose, recurse into nontrivial modules, form the
/// quotient and apply `prime_inv` to it. Prime inputs go to `prime_inv`
/// directly. All invariants of graphs that are to be compared must be
/// computed with the same color table.
pub fn decomposition_invariant(
    g: &ColoredGraph,
    functor: &dyn DecompositionFunctor,
    rep: &dyn ReplacementOperator,
    prime_inv: &mut dyn FnMut(&ColoredGraph, &mut ColorTable) -> Result<InvariantValue, ModError>,
    table: &mut ColorTable,
) -> Result<(InvariantValue, DecompositionStats), ModError> {
    let mut stats = DecompositionStats::default();
    let inv = recurse(g, functor, rep, prime_inv, table, 0, &mut stats)?;
    Ok((inv, stats))
}

fn recurse(
    g: &ColoredGraph,
    functor: &dyn DecompositionFunctor,
    rep: &dyn ReplacementOperator,
    prime_inv: &mut dyn FnMut(&ColoredGraph, &mut ColorTable) -> Result<InvariantValue, ModError>,
    table: &mut ColorTable,
    depth: usize,
    stats: &mut DecompositionStats,
) -> Result<InvariantValue, ModError> {
    stats.max_depth = stats.max_depth.max(depth);
    let fam = functor.decompose(g)?;
    if !fam.is_partition(g.n()) {
        return Err(ModError::NotAPartition);
    }
    fam.verify(g)?;
    let count = fam.nontrivial.iter().filter(|&&t| t).count();
    stats.trace.push(format!("depth {depth}: n={} modules={} nontrivial={count}", g.n(), fam.modules.len()));
    if count == 0 {
        stats.prime_calls += 1;
        return prime_inv(g, table);
    }
    let mut invs = Vec::with_capacity(fam.modules.len());
    for (m, &nontrivial) in fam.modules.iter().zip(&fam.nontrivial) {
        if nontrivial {
            invs.push(Some(recurse(&g.induced(m), functor, rep, prime_inv, table, depth + 1, stats)?));
        } else {
            invs.push(None);
        }
    }
    let q = quotient(g, &fam, rep, &invs, table)?;
    // a quotient outside the functor's domain cannot be checked for simplicity
    if let Ok(qfam) = functor.decompose(&q) {
        if qfam.has_nontrivial() {
            return Err(ModError::NotSimple);
        }
    }
    stats.prime_calls += 1;
    prime_inv(&q, table)
}
