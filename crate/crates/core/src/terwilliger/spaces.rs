use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{algebra_closure, sparse_mat_mul, ExactMatrix, SpanBasis, SparseVec};
use crate::permcore::PermGroup;
use crate::schemes::Scheme;

use super::centralizer_basis;

/// `E*_i A_j E*_k` at base point `v`, flattened: the pairs `(u, w)` with
/// `u ∈ N_i(v)`, `w ∈ N_k(v)` and `(u, w) ∈ R_j`.
pub fn monomial(scheme: &Scheme, i: usize, j: usize, k: usize, v: usize) -> SparseVec {
    let n = scheme.n();
    let ni = scheme.neighborhood(i, v);
    let nk = scheme.neighborhood(k, v);
    SparseVec::indicator(
        ni.iter()
            .flat_map(|&u| nk.iter().map(move |&w| (u, w)))
            .filter(|&(u, w)| scheme.color(u, w) == j)
            .map(|(u, w)| u * n + w),
    )
}

fn check_base(scheme: &Scheme, v: usize) -> Result<()> {
    if v >= scheme.n() {
        return Err(Error::PointOutOfRange {
            point: v,
            degree: scheme.n(),
        });
    }
    Ok(())
}

/// Span of all `E*_i A_j E*_k`.
///
/// Also checks that a monomial vanishes exactly when `p_{ij}^k = 0`, so
/// that the dimension equals the number of nonzero intersection numbers.
pub fn t0_basis(scheme: &Scheme, v: usize) -> Result<SpanBasis> {
    check_base(scheme, v)?;
    let r = scheme.rank();
    let p = scheme.tensor();
    let mut basis = SpanBasis::for_matrices(scheme.n());
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let m = monomial(scheme, i, j, k, v);
                if m.is_empty() != (p.get(i, j, k) == 0) {
                    return Err(Error::Inconsistent(format!(
                        "E*_{i} A_{j} E*_{k} and p_{i}{j}^{k} disagree on vanishing"
                    )));
                }
                if !m.is_empty() {
                    basis.insert_vec(&m)?;
                }
            }
        }
    }
    if basis.dim() != p.nonzero_count() {
        return Err(Error::Inconsistent(format!(
            "dim T0 = {} but {} intersection numbers are nonzero",
            basis.dim(),
            p.nonzero_count()
        )));
    }
    Ok(basis)
}

/// `T⁰` together with every product `(E*_i A_j E*_k)(E*_k A_j' E*_k')`.
/// Products whose middle idempotents differ vanish and are skipped.
pub fn t1_basis(scheme: &Scheme, v: usize) -> Result<SpanBasis> {
    let mut basis = t0_basis(scheme, v)?;
    let r = scheme.rank();
    let n = scheme.n();
    let p = scheme.tensor();
    for mid in 0..r {
        let left: Vec<SparseVec> = (0..r)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .filter(|&(i, j)| p.get(i, j, mid) != 0)
            .map(|(i, j)| monomial(scheme, i, j, mid, v))
            .collect();
        let right: Vec<SparseVec> = (0..r)
            .flat_map(|j| (0..r).map(move |k| (j, k)))
            .filter(|&(j, k)| p.get(mid, j, k) != 0)
            .map(|(j, k)| monomial(scheme, mid, j, k, v))
            .collect();
        for a in &left {
            for b in &right {
                basis.insert_vec(&sparse_mat_mul(n, a, b))?;
            }
        }
    }
    Ok(basis)
}

/// The Terwilliger algebra `T_v = ⟨A_0, .., A_d, E*_0, .., E*_d⟩`.
pub fn t_algebra(scheme: &Scheme, v: usize) -> Result<SpanBasis> {
    check_base(scheme, v)?;
    let mut gens: Vec<ExactMatrix> = Vec::with_capacity(2 * scheme.rank());
    for i in 0..scheme.rank() {
        gens.push(scheme.adjacency_matrix(i)?);
    }
    for i in 0..scheme.rank() {
        gens.push(scheme.dual_idempotent(i, v)?);
    }
    algebra_closure(&gens, None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDims {
    pub base_point: usize,
    pub t0: usize,
    pub t1: usize,
    pub t: usize,
    pub t_tilde: Option<usize>,
}

/// `T⁰ ⊆ T¹ ⊆ T ⊆ T̃` at one base point. `T̃` needs a group.
#[derive(Clone, Debug)]
pub struct TerwilligerSpaces {
    pub base_point: usize,
    pub t0: SpanBasis,
    pub t1: SpanBasis,
    pub t: SpanBasis,
    pub t_tilde: Option<SpanBasis>,
}

impl TerwilligerSpaces {
    pub fn compute(scheme: &Scheme, group: Option<&PermGroup>, v: usize) -> Result<Self> {
        let t0 = t0_basis(scheme, v)?;
        let t1 = t1_basis(scheme, v)?;
        let t = t_algebra(scheme, v)?;
        let t_tilde = match group {
            Some(g) => {
                scheme.check_automorphisms(g)?;
                Some(centralizer_basis(g, v)?.basis)
            }
            None => None,
        };
        Ok(TerwilligerSpaces {
            base_point: v,
            t0,
            t1,
            t,
            t_tilde,
        })
    }

    pub fn dims(&self) -> SpaceDims {
        SpaceDims {
            base_point: self.base_point,
            t0: self.t0.dim(),
            t1: self.t1.dim(),
            t: self.t.dim(),
            t_tilde: self.t_tilde.as_ref().map(SpanBasis::dim),
        }
    }

    /// Checks the inclusions `T⁰ ⊆ T¹ ⊆ T ⊆ T̃` row by row.
    pub fn check_inclusions(&self) -> Result<()> {
        let pairs: [(&str, &SpanBasis, &SpanBasis); 2] = [
            ("T0 in T1", &self.t0, &self.t1),
            ("T1 in T", &self.t1, &self.t),
        ];
        for (what, small, big) in pairs {
            if !small.rows().all(|r| big.contains(r)) {
                return Err(Error::Inconsistent(format!("{what} fails")));
            }
        }
        if let Some(tt) = &self.t_tilde {
            if !self.t.rows().all(|r| tt.contains(r)) {
                return Err(Error::Inconsistent("T in T~ fails".into()));
            }
        }
        Ok(())
    }
}
