//! Permutation groups via deterministic Schreier-Sims, backtracking set
//! stabilizers, and an individualization-refinement engine for canonical
//! labeling, automorphism groups and isomorphism cosets of colored graphs.

mod group;
pub mod ir;
mod perm;
mod search;

pub use group::{orbit_under, PermutationGroup};
pub use ir::{
    automorphism_group, canonical_form, ir_iso, ir_iso_with, is_isomorphism, iso_coset, Certificate, CanonicalForm,
    IrOptions, IrOutcome, IsoCoset, TargetCell,
};
pub use perm::Permutation;
pub use search::{find_element, set_image, set_stabilizer, subgroup_search, subgroup_search_partial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("permutation of degree {got} where degree {expected} was expected")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("image array is not a bijection")]
    NotBijection,
    #[error("point {0} out of range")]
    PointOutOfRange(usize),
}
