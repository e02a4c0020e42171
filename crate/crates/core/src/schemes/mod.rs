//! Association schemes as color matrices: axiom checks, intersection
//! numbers, adjacency and dual idempotent matrices, and the orbital scheme
//! of a transitive group.

mod axioms;
mod scheme;
mod spec;

pub use axioms::{verify_color_matrix, Axiom, AxiomReport, Witness};
pub use scheme::{IntersectionTensor, Origin, Scheme, Thinness};
pub use spec::SchemeSpec;
