//! Finite permutation groups given by generators: enumeration, coset
//! actions, orbits, orbitals, point stabilizers and regular subgroups.
//!
//! Everything is computed from a full enumeration of the group, which is
//! fine at the sizes this crate targets (see [`Caps`]).

mod action;
mod group;
mod orbit;
mod permutation;
mod regular;
mod spec;

pub use action::{coset_action, GroupAction};
pub use group::{point_stabilizer, Caps, PermGroup, DEFAULT_DEGREE_CAP, DEFAULT_GROUP_CAP};
pub use orbit::{orbitals, orbits, pair_orbits, Orbitals};
pub use permutation::{compose, Permutation};
pub use regular::find_regular_subgroup;
pub use spec::{GroupSpec, SubgroupSpec};
