//! Complexity of isomorphism on graphs with two forbidden induced subgraphs.
//!
//! [`classify`] walks a fixed decision tree. Every branching test is run on
//! the actual graphs, and every verdict comes with the trail of rules that
//! produced it.

mod rules;
mod shape;

pub use rules::{classify, cite};
pub use shape::{is_forest_of_subdivided_stars, StarComponent, StarForestShape};

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    PolyTime,
    GIComplete,
    /// Settled by an external result whose outcome is not tracked here.
    External,
    /// One of the finitely many small cases the decision tree leaves open.
    OpenFinite,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::PolyTime => "PolyTime",
            Status::GIComplete => "GIComplete",
            Status::External => "External",
            Status::OpenFinite => "OpenFinite",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: String,
    pub cite: &'static str,
}

/// In-repo solver that decides the class of a polynomial verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverRef {
    /// `(K_{1,s} + K_{1,s}, K_t)`-free graphs.
    DoubleStar { s: usize, t: usize },
    /// `(P_5, K_t)`-free graphs.
    P5 { t: usize },
    /// `(H(1,b,0), K_s)`-free graphs.
    H1b0 { b: usize, s: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub trail: Vec<Step>,
    pub solver: Option<SolverRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("forbidden graphs must have at least one vertex")]
    Empty,
}
