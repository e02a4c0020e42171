use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{SpanBasis, SparseVec};
use crate::schemes::Scheme;

/// Pattern of a 2×2 block, for rows of a compressed reduced basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockShape {
    /// `I_2`
    Identity,
    /// `J_2 - I_2`
    AntiIdentity,
    /// `J_2`
    AllOnes,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeirceBlock {
    pub i: usize,
    pub k: usize,
    pub rows: usize,
    pub cols: usize,
    pub dim: usize,
    /// Shapes of the reduced basis of the compressed block, present only for
    /// 2×2 blocks.
    pub shapes: Option<Vec<BlockShape>>,
}

fn shape_of(row: &SparseVec) -> BlockShape {
    let one = BigRational::one();
    let pattern: Option<Vec<bool>> = (0..4)
        .map(|p| match row.get(p) {
            None => Some(false),
            Some(x) if *x == one => Some(true),
            Some(_) => None,
        })
        .collect();
    match pattern.unwrap_or_default().as_slice() {
        [true, false, false, true] => BlockShape::Identity,
        [false, true, true, false] => BlockShape::AntiIdentity,
        [true, true, true, true] => BlockShape::AllOnes,
        _ => BlockShape::Other,
    }
}

/// Dimension of `E*_i X E*_k` for a space `X`: each basis element is cut
/// down to rows `N_i(v)` and columns `N_k(v)` and the pieces are re-reduced.
pub fn peirce_block(
    basis: &SpanBasis,
    scheme: &Scheme,
    i: usize,
    k: usize,
    v: usize,
) -> Result<PeirceBlock> {
    let r = scheme.rank();
    for idx in [i, k] {
        if idx >= r {
            return Err(Error::IndexOutOfRange {
                index: idx,
                bound: r,
            });
        }
    }
    let n = scheme.n();
    if basis.ambient() != n * n {
        return Err(Error::ShapeMismatch {
            expected: (n, n),
            found: (basis.ambient(), 1),
        });
    }
    let ni = scheme.neighborhood(i, v);
    let nk = scheme.neighborhood(k, v);
    let mut row_pos = vec![usize::MAX; n];
    let mut col_pos = vec![usize::MAX; n];
    for (a, &u) in ni.iter().enumerate() {
        row_pos[u] = a;
    }
    for (b, &w) in nk.iter().enumerate() {
        col_pos[w] = b;
    }
    let mut block = SpanBasis::new(ni.len() * nk.len());
    for row in basis.rows() {
        let piece = SparseVec::from_sorted(
            row.iter()
                .filter_map(|(idx, x)| {
                    let (a, b) = (row_pos[idx / n], col_pos[idx % n]);
                    (a != usize::MAX && b != usize::MAX && !x.is_zero())
                        .then(|| (a * nk.len() + b, x.clone()))
                })
                .collect::<std::collections::BTreeMap<_, _>>()
                .into_iter()
                .collect(),
        );
        block.insert_vec(&piece)?;
    }
    let shapes = (ni.len() == 2 && nk.len() == 2).then(|| block.rows().map(shape_of).collect());
    Ok(PeirceBlock {
        i,
        k,
        rows: ni.len(),
        cols: nk.len(),
        dim: block.dim(),
        shapes,
    })
}
