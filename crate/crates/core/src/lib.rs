//! Cut groups of odd order and their Sylow 3-subgroups.
//!
//! A finite group is *cut* when every generator of each cyclic subgroup
//! `⟨g⟩` is conjugate to `g` or to `g⁻¹`; equivalently every irreducible
//! character has field of values `Q` or an imaginary quadratic field. This
//! crate decides the property both ways (conjugacy classes and exact
//! character tables), computes Sylow subgroups, cores, minimal normal
//! subgroups, inertia groups and Clifford decompositions, and checks on a
//! corpus of odd-order groups that Sylow 3-subgroups and 3-cores of cut
//! groups are again cut.

pub mod arith;
mod chain;
pub mod chartable;
pub mod classes;
pub mod corpus;
pub mod cut;
pub mod error;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod structure;
pub mod verify;

/// Largest supported permutation degree.
pub const MAX_DEGREE: usize = 10_000;

pub use classes::{
    are_conjugate, centralizer, class_power_map, conjugacy_classes, ConjugacyClass,
    ConjugacyClassTable,
};
pub use error::{Error, Result};
pub use group::{group_from_generators, PermGroup, DEFAULT_ENUMERATION_CAP};
pub use perm::{element_order, Permutation};
