use graph_core::ColoredGraph;
use moddecomp::InvariantValue;

use crate::IsoError;

type Decider<'a> = Box<dyn FnMut(&ColoredGraph, &ColoredGraph) -> Result<bool, IsoError> + 'a>;

/// A complete invariant simulated by an isomorphism decider.
///
/// The session stores the first graph of every isomorphism class it has
/// seen; the value of a graph is the index of its representative. Values are
/// only comparable within one session.
pub struct InvariantSession<'a> {
    reps: Vec<ColoredGraph>,
    decider: Decider<'a>,
    calls: usize,
    queries: usize,
}

impl<'a> InvariantSession<'a> {
    pub fn new(decider: impl FnMut(&ColoredGraph, &ColoredGraph) -> Result<bool, IsoError> + 'a) -> Self {
        InvariantSession { reps: Vec::new(), decider: Box::new(decider), calls: 0, queries: 0 }
    }

    /// Index of the representative isomorphic to `g`, added if new.
    pub fn query(&mut self, g: &ColoredGraph) -> Result<InvariantValue, IsoError> {
        self.queries += 1;
        for (i, rep) in self.reps.iter().enumerate() {
            if !same_shape(rep, g) {
                continue;
            }
            self.calls += 1;
            if (self.decider)(rep, g)? {
                return Ok(value(i));
            }
        }
        self.reps.push(g.clone());
        Ok(value(self.reps.len() - 1))
    }

    /// Decider invocations so far.
    pub fn calls(&self) -> usize {
        self.calls
    }

    pub fn queries(&self) -> usize {
        self.queries
    }

    pub fn representatives(&self) -> &[ColoredGraph] {
        &self.reps
    }
}

fn value(i: usize) -> InvariantValue {
    InvariantValue((i as u64).to_be_bytes().to_vec())
}

/// Cheap necessary conditions for isomorphism.
fn same_shape(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut x = a.colors().to_vec();
    let mut y = b.colors().to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}
