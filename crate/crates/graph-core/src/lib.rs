//! Colored graphs with packed adjacency rows, standard constructions, named
//! families, induced-subgraph containment and a line-based text format.

mod budget;
mod color;
mod containment;
mod error;
pub mod family;
pub mod gen;
mod graph;
pub mod io;
mod ops;

pub use budget::{Budget, BUDGET_ENV, DEFAULT_BUDGET};
pub use color::ColorTable;
pub use containment::{contains_induced, is_in_class};
pub use error::{BudgetExhausted, GraphError, ParseError};
pub use family::{build_named, GraphFamily};
pub use graph::{set_vertex_cap, vertex_cap, ColoredGraph, Neighbors, DEFAULT_VERTEX_CAP};
pub use io::{parse_graph, write_graph};
pub use ops::{bipartite_complement, complement, disjoint_union, join_universal, make_graph};
