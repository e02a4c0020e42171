//! Exact computations on Schurian association schemes and their Terwilliger
//! algebras.
//!
//! A transitive permutation group yields its orbital scheme; for a base
//! point `v` the crate builds the nested spaces `T⁰ ⊆ T¹ ⊆ T ⊆ T̃`
//! (the span of the triple products `E*_i A_j E*_k`, their pairwise products,
//! the Terwilliger algebra, and the centralizer algebra of the stabilizer
//! `G_v`) over the rationals, and classifies quasi-thin schemes both from
//! those dimensions and from their diamond pairs.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod exactlin;
pub mod permcore;
pub mod schemes;
pub mod terwilliger;

pub use error::{Error, Result};
