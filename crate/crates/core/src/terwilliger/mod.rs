//! The spaces `T⁰ ⊆ T¹ ⊆ T ⊆ T̃` at a base point, diamond pairs, Peirce
//! blocks `E*_i X E*_k`, and the Wedderburn dimension identity.

mod centralizer;
mod diamond;
mod peirce;
mod spaces;
mod wedderburn;

pub use centralizer::{centralizer_basis, Centralizer, SuborbitCount};
pub use diamond::{
    diamond_middle, diamond_pairs, diamond_pairs_at, is_diamond, unordered_pairs, DiamondPair,
    DiamondWitness,
};
pub use peirce::{peirce_block, BlockShape, PeirceBlock};
pub use spaces::{monomial, t0_basis, t1_basis, t_algebra, SpaceDims, TerwilligerSpaces};
pub use wedderburn::{wedderburn_check, WedderburnReport};
