//! Colored modules, decomposition functors (classical and degree
//! dependence), replacement operators, quotient graphs and the recursive
//! complete invariant built from an invariant for prime graphs.

mod functor;
mod module;
mod quotient;

pub use functor::{
    classical_functor, degree_dependence_modules, nc_closure, nc_closure_ordered, ClassicalFunctor,
    DecompositionFunctor, DegreeDependenceFunctor, ModuleFamily,
};
pub use module::{is_colored_module, is_nontrivial_module, is_uncolored_module, module_closure};
pub use quotient::{
    decomposition_invariant, quotient, reversibility_case, DecompositionStats, InvariantValue, KeepOne,
    ReplacementOperator, ReversibilityCase, MODULE_MARKER,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("family does not partition the vertex set")]
    NotAPartition,
    #[error("functor returned a set that is not a colored module: {0:?}")]
    NotAModule(Vec<usize>),
    #[error("quotient graph is not prime for this functor")]
    NotSimple,
    #[error("replacement failed: {0}")]
    Replacement(String),
    #[error("prime invariant failed: {0}")]
    PrimeInvariant(String),
}
