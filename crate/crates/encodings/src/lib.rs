//! Graph classes described by labeled encodings `(J, L, L_N)`.
//!
//! A label pair `(i, j)` carries an expected adjacency `L(i, j)` and a budget
//! `L_N(i, j)` of exceptions a vertex labeled `i` may have towards the
//! vertices labeled `j`.

mod fixtures;
mod format;
mod ln_iso;
mod reduction;
mod search;

pub use fixtures::builtin_encodings;
pub use format::{parse_encoding, write_encoding};
pub use ln_iso::{bounded_ln_iso, bounded_ln_iso_with, merge_twin_labels, LnVerdict};
pub use reduction::{
    check_witness, in_reduction_class, is_simple_path_encoding, normalize_for_reduction, reduce_into_class,
    PathWitness, Reduction,
};
pub use search::{class_excludes, find_encoding_map, find_encoding_map_with, is_encoding_map, EncodingSearch};

use graph_core::{BudgetExhausted, GraphError};
use iso_engines::IsoError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodingError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid path witness: {0}")]
    InvalidWitness(String),
    #[error("encoding has an unbounded exception budget")]
    InfiniteBudget,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error("budget exhausted")]
    Budget,
}

impl From<BudgetExhausted> for EncodingError {
    fn from(_: BudgetExhausted) -> Self {
        EncodingError::Budget
    }
}

/// Expected adjacency between two labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Adj {
    A,
    N,
}

/// Exception budget; `Inf` is a sentinel, not a large number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ln {
    Finite(u32),
    Inf,
}

impl Ln {
    pub fn allows(self, count: usize) -> bool {
        match self {
            Ln::Finite(b) => count <= b as usize,
            Ln::Inf => true,
        }
    }

    pub fn at_least(self, k: u32) -> bool {
        match self {
            Ln::Finite(b) => b >= k,
            Ln::Inf => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Ln::Finite(b) => Some(b),
            Ln::Inf => None,
        }
    }
}

/// Labeled encoding on labels `0..k`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Encoding {
    names: Vec<String>,
    l: Vec<Adj>,
    ln: Vec<Ln>,
}

impl Encoding {
    /// `k` labels named `p1..pk`, all pairs `N` with budget 0.
    pub fn new(k: usize) -> Self {
        Encoding {
            names: (1..=k).map(|i| format!("p{i}")).collect(),
            l: vec![Adj::N; k * k],
            ln: vec![Ln::Finite(0); k * k],
        }
    }

    pub fn k(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn l(&self, i: usize, j: usize) -> Adj {
        self.l[i * self.k() + j]
    }

    pub fn ln(&self, i: usize, j: usize) -> Ln {
        self.ln[i * self.k() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, adj: Adj, ln: Ln) {
        let k = self.k();
        self.l[i * k + j] = adj;
        self.ln[i * k + j] = ln;
    }

    pub fn set_l(&mut self, i: usize, j: usize, adj: Adj) {
        let k = self.k();
        self.l[i * k + j] = adj;
    }

    pub fn set_ln(&mut self, i: usize, j: usize, ln: Ln) {
        let k = self.k();
        self.ln[i * k + j] = ln;
    }

    /// Sets `L` on both `(i, j)` and `(j, i)`.
    pub fn set_l_sym(&mut self, i: usize, j: usize, adj: Adj) {
        self.set_l(i, j, adj);
        self.set_l(j, i, adj);
    }

    pub fn is_l_symmetric(&self) -> bool {
        let k = self.k();
        (0..k).all(|i| (0..k).all(|j| self.l(i, j) == self.l(j, i)))
    }

    pub fn all_finite(&self) -> bool {
        self.ln.iter().all(|b| b.finite().is_some())
    }

    /// Largest finite budget, 0 when there is none.
    pub fn max_finite(&self) -> u32 {
        self.ln.iter().filter_map(|b| b.finite()).max().unwrap_or(0)
    }

    /// Whether `u` labeled `a` is an exception for `v` labeled `b`, given
    /// their adjacency.
    pub(crate) fn is_exception(&self, a: usize, b: usize, adjacent: bool) -> bool {
        match self.l(a, b) {
            Adj::A => !adjacent,
            Adj::N => adjacent,
        }
    }
}
