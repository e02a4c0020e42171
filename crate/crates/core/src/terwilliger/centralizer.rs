use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactlin::{SpanBasis, SparseVec};
use crate::permcore::{orbits, pair_orbits, point_stabilizer, PermGroup};

/// The centralizer algebra of `G_v`, spanned by the 0/1 matrices of the
/// orbits of `G_v` on ordered pairs.
#[derive(Clone, Debug)]
pub struct Centralizer {
    pub basis: SpanBasis,
    pub stabilizer_order: usize,
    /// Number of orbits of `G_v` on `Ω × Ω`.
    pub orbit_count: usize,
    pub suborbits: SuborbitCount,
}

/// The same dimension counted suborbit by suborbit: for each orbit `Δ_i` of
/// `G_v` on points with representative `u_i`, the number `N_i` of orbits of
/// `G_v ∩ G_{u_i}` on points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuborbitCount {
    pub suborbit_sizes: Vec<usize>,
    pub terms: Vec<usize>,
    pub total: usize,
}

pub fn centralizer_basis(group: &PermGroup, v: usize) -> Result<Centralizer> {
    group.require_transitive()?;
    let n = group.degree();
    let stab = point_stabilizer(group, v)?;
    let classes = pair_orbits(stab.generators(), n);
    let mut basis = SpanBasis::for_matrices(n);
    for c in &classes {
        basis.insert_vec(&SparseVec::indicator(c.iter().map(|&(a, b)| a * n + b)))?;
    }

    let suborbits = orbits(stab.generators(), n, Some(v));
    let mut terms = Vec::with_capacity(suborbits.len());
    for delta in &suborbits {
        let u = delta[0];
        let both = point_stabilizer(&stab, u)?;
        terms.push(orbits(both.generators(), n, None).len());
    }
    let total = terms.iter().sum();
    Ok(Centralizer {
        basis,
        stabilizer_order: stab.order(),
        orbit_count: classes.len(),
        suborbits: SuborbitCount {
            suborbit_sizes: suborbits.iter().map(Vec::len).collect(),
            terms,
            total,
        },
    })
}
