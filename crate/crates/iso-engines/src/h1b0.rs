//! `(H(1,b,0), K_s)`-free graphs.

use std::cell::RefCell;

use graph_core::family::{complete, subdivided_star};
use graph_core::{contains_induced, Budget, ColorTable, ColoredGraph};
use moddecomp::{decomposition_invariant, ClassicalFunctor, KeepOne, ModError};
use permgroup::{ir_iso_with, IrOptions};

use crate::dstar::{check_class, double_star, double_star_kt_iso_with, same_shape};
use crate::session::InvariantSession;
use crate::{Decision, IsoError, SolverOptions};

/// `H(1,b,0)`: a center with one path of length two and `b` leaves.
pub fn h1b0_graph(b: usize) -> ColoredGraph {
    subdivided_star(&[1, b, 0]).expect("valid parameters")
}

pub fn h1b0_ks_iso(g1: &ColoredGraph, g2: &ColoredGraph, b: usize, s: usize) -> Result<bool, IsoError> {
    let budget = Budget::unlimited();
    Ok(h1b0_ks_iso_with(g1, g2, b, s, &SolverOptions::new(&budget))?.iso)
}

/// Isomorphism of `(H(1,b,0), K_s)`-free graphs.
///
/// Graphs without an induced `K_{1,2b-1} ∪ K_{1,2b-1}` go to the double-star
/// solver. Otherwise both graphs get the classical modular decomposition
/// invariant, whose prime pieces are decided by the double-star solver
/// through a shared invariant session.
pub fn h1b0_ks_iso_with(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    b: usize,
    s: usize,
    opts: &SolverOptions<'_>,
) -> Result<Decision, IsoError> {
    if b == 0 {
        return Err(IsoError::Precondition("b must be positive".into()));
    }
    let forbidden = vec![(format!("H(1,{b},0)"), h1b0_graph(b)), (format!("K_{s}"), complete(s))];
    check_class(g1, &forbidden, "first")?;
    check_class(g2, &forbidden, "second")?;
    let decided = |iso: bool, route: &str| Ok(Decision { iso, route: route.to_string() });
    if !same_shape(g1, g2) {
        return decided(false, "shape");
    }
    let k = 2 * b - 1;
    let ds = double_star(k);
    let free1 = contains_induced(&ds, &g1.uncolored()).is_none();
    let free2 = contains_induced(&ds, &g2.uncolored()).is_none();
    if free1 != free2 {
        return decided(false, "double-star-free mismatch");
    }
    if free1 {
        let d = double_star_kt_iso_with(g1, g2, k, s, opts)?;
        return decided(d.iso, &format!("double-star-free: {}", d.route));
    }
    let failure: RefCell<Option<IsoError>> = RefCell::new(None);
    let mut session = InvariantSession::new(|a: &ColoredGraph, c: &ColoredGraph| {
        let a_free = contains_induced(&ds, &a.uncolored()).is_none();
        let c_free = contains_induced(&ds, &c.uncolored()).is_none();
        if a_free && c_free {
            Ok(double_star_kt_iso_with(a, c, k, s, opts)?.iso)
        } else {
            log::warn!("prime piece contains a double star; using the general search");
            Ok(ir_iso_with(a, c, &IrOptions { budget: Some(opts.budget), ..Default::default() })?.is_some())
        }
    });
    let mut table = ColorTable::new();
    if let Some(m) = g1.max_color().max(g2.max_color()) {
        table.reserve_through(m);
    }
    let mut prime = |q: &ColoredGraph, _: &mut ColorTable| {
        session.query(q).map_err(|e| {
            let msg = e.to_string();
            *failure.borrow_mut() = Some(e);
            ModError::PrimeInvariant(msg)
        })
    };
    let run = |g: &ColoredGraph, prime: &mut dyn FnMut(&ColoredGraph, &mut ColorTable) -> Result<_, ModError>, table: &mut ColorTable| {
        decomposition_invariant(g, &ClassicalFunctor, &KeepOne, prime, table)
    };
    let r1 = run(g1, &mut prime, &mut table);
    let r2 = r1.as_ref().ok().map(|_| run(g2, &mut prime, &mut table));
    if let Some(e) = failure.borrow_mut().take() {
        return Err(e);
    }
    let (inv1, stats1) = r1?;
    let (inv2, _) = r2.expect("first run succeeded")?;
    decided(inv1 == inv2, &format!("modular decomposition ({} prime calls)", stats1.prime_calls))
}
