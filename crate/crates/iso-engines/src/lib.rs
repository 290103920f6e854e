//! Isomorphism deciders.
//!
//! All engines compare colors as raw ids, so graphs that are compared must
//! share one color space.

mod brute;
mod dstar;
mod h1b0;
mod p5;
mod session;
mod util;
mod valence;

pub use brute::{brute_force_iso, brute_force_iso_with, BRUTE_FORCE_LIMIT};
pub use dstar::{double_star_kt_iso, double_star_kt_iso_with, double_star};
pub use h1b0::{h1b0_graph, h1b0_ks_iso, h1b0_ks_iso_with};
pub use p5::{p5_kt_iso, p5_kt_iso_with};
pub use session::InvariantSession;
pub use valence::{
    bounded_color_valence_iso, bounded_color_valence_iso_with, gen_color_valence_aut, gen_color_valence_aut_with,
    gen_color_valence_iso, gen_color_valence_iso_with, gcv_combined_graph, CombinedGraph,
};

use graph_core::{Budget, BudgetExhausted};
use moddecomp::ModError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("graph with {n} vertices exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("input is not in the class: {0}")]
    NotInClass(String),
    #[error("budget exhausted")]
    Budget,
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Module(#[from] ModError),
}

impl From<BudgetExhausted> for IsoError {
    fn from(_: BudgetExhausted) -> Self {
        IsoError::Budget
    }
}

/// Answer of a class solver with the route that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub iso: bool,
    pub route: String,
}

/// Tuning for the class solvers.
#[derive(Debug)]
pub struct SolverOptions<'a> {
    pub budget: &'a Budget,
    /// Largest individualization set tried by the double-star solver.
    pub max_individualized: usize,
    /// Target generalized color valence for the double-star solver; `None`
    /// means `2s`.
    pub valence_target: Option<usize>,
    /// Largest dominating set tried by the P5 solver; `None` means
    /// `t * max(3, t - 1)`.
    pub max_dominating: Option<usize>,
}

impl<'a> SolverOptions<'a> {
    pub fn new(budget: &'a Budget) -> Self {
        SolverOptions { budget, max_individualized: 2, valence_target: None, max_dominating: None }
    }
}
