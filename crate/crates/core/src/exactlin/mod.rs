//! Exact rational matrices and subspaces of the `n²`-dimensional matrix
//! space kept in reduced row-echelon form.
//!
//! Matrices are flattened row-major (`(r, c) ↦ r·n + c`) and pivots are the
//! first nonzero column, so bases are reproducible run to run.

mod matrix;
mod span;

pub use matrix::{int, mat_mul, ExactMatrix};
pub use span::{
    algebra_closure, default_round_cap, is_closed_under_products, sparse_mat_mul, SpanBasis,
    SparseVec,
};
