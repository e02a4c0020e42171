use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schemes::Scheme;

/// Points realising a diamond pair at base point `v`: `N_i(v) = {y1, y2}`,
/// `N_k(v) = {u, z}`, and all four pairs `(y_a, u)`, `(y_a, z)` lie in the
/// middle class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondWitness {
    pub v: usize,
    pub y1: usize,
    pub y2: usize,
    pub u: usize,
    pub z: usize,
}

/// An ordered class pair `(i, k)` with `k_i = k_k = 2` and `p_{ij}^k = 2`
/// for the (unique) middle class `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondPair {
    pub i: usize,
    pub k: usize,
    pub j: usize,
    pub witness: DiamondWitness,
}

/// The middle class of `(i, k)` when it is a diamond pair.
pub fn diamond_middle(scheme: &Scheme, i: usize, k: usize) -> Option<usize> {
    if scheme.valence(i) != 2 || scheme.valence(k) != 2 {
        return None;
    }
    (0..scheme.rank()).find(|&j| scheme.tensor().get(i, j, k) == 2)
}

pub fn is_diamond(scheme: &Scheme, i: usize, k: usize) -> bool {
    diamond_middle(scheme, i, k).is_some()
}

/// All ordered diamond pairs, with witnesses at base point 0.
pub fn diamond_pairs(scheme: &Scheme) -> Result<Vec<DiamondPair>> {
    diamond_pairs_at(scheme, 0)
}

pub fn diamond_pairs_at(scheme: &Scheme, v: usize) -> Result<Vec<DiamondPair>> {
    if !scheme.is_quasi_thin() {
        return Err(Error::NotQuasiThin);
    }
    let r = scheme.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for k in 0..r {
            if scheme.valence(i) != 2 || scheme.valence(k) != 2 {
                continue;
            }
            let middles: Vec<usize> = (0..r)
                .filter(|&j| scheme.tensor().get(i, j, k) == 2)
                .collect();
            let j = match middles.as_slice() {
                [] => continue,
                [j] => *j,
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "pair ({i}, {k}) has several middle classes {middles:?}"
                    )))
                }
            };
            let (ni, nk) = (scheme.neighborhood(i, v), scheme.neighborhood(k, v));
            let w = DiamondWitness {
                v,
                y1: ni[0],
                y2: ni[1],
                u: nk[0],
                z: nk[1],
            };
            let ok = [w.y1, w.y2]
                .iter()
                .all(|&y| scheme.color(y, w.u) == j && scheme.color(y, w.z) == j);
            if !ok {
                return Err(Error::Inconsistent(format!(
                    "diamond pair ({i}, {k}) has no point-level witness at {v}"
                )));
            }
            out.push(DiamondPair {
                i,
                k,
                j,
                witness: w,
            });
        }
    }
    Ok(out)
}

/// Diamond pairs as unordered class pairs.
pub fn unordered_pairs(pairs: &[DiamondPair]) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .map(|p| (p.i.min(p.k), p.i.max(p.k)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}
