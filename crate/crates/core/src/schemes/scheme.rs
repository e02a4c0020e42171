use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{int, mat_mul, ExactMatrix};
use crate::permcore::{orbitals, PermGroup};

use super::axioms::verify_color_matrix;
use super::AxiomReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Origin {
    SchurianFromGroup,
    Ingested,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Thinness {
    Thin,
    QuasiThin,
    Neither,
}

/// Intersection numbers `p_{ij}^k`, indexed `[(i * r + j) * r + k]` with `r`
/// the number of classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTensor {
    classes: usize,
    p: Vec<u32>,
}

impl IntersectionTensor {
    pub fn classes(&self) -> usize {
        self.classes
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.classes;
        self.p[(i * r + j) * r + k]
    }

    /// Number of triples with `p_{ij}^k ≠ 0`.
    pub fn nonzero_count(&self) -> usize {
        self.p.iter().filter(|&&x| x != 0).count()
    }

    /// `#{j : p_{ij}^k ≠ 0}`.
    pub fn support_size(&self, i: usize, k: usize) -> usize {
        (0..self.classes)
            .filter(|&j| self.get(i, j, k) != 0)
            .count()
    }

    pub fn max(&self) -> u32 {
        self.p.iter().copied().max().unwrap_or(0)
    }
}

/// An association scheme on `{0, .., n-1}` given by its color matrix.
///
/// Class 0 is the diagonal. Schurian schemes keep the orbital order of
/// their group (lexicographically smallest pair); ingested schemes are
/// relabelled by first occurrence in a row-major scan. Both orders agree.
#[derive(Clone, Debug)]
pub struct Scheme {
    n: usize,
    color: Vec<usize>,
    dual: Vec<usize>,
    valences: Vec<usize>,
    origin: Origin,
    tensor: IntersectionTensor,
}

impl Scheme {
    /// Verifies the axioms on an arbitrary labelling, then relabels.
    pub fn from_color_matrix(n: usize, color: &[usize], origin: Origin) -> Result<Self> {
        if color.len() != n * n {
            return Err(Error::ShapeMismatch {
                expected: (n, n),
                found: (color.len() / n.max(1), n),
            });
        }
        let report = verify_color_matrix(n, color);
        if !report.is_ok() {
            return Err(Error::Axioms(Box::new(report)));
        }
        let mut relabel = std::collections::HashMap::new();
        if n > 0 {
            relabel.insert(color[0], 0usize);
        }
        let mut canon = Vec::with_capacity(n * n);
        for &c in color {
            let next = relabel.len();
            canon.push(*relabel.entry(c).or_insert(next));
        }
        Ok(Scheme::build(n, canon, origin))
    }

    /// The orbital scheme of a transitive group.
    pub fn from_orbitals(group: &PermGroup) -> Result<Self> {
        let orb = orbitals(group)?;
        let n = group.degree();
        let s = Scheme::from_color_matrix(n, orb.color_matrix(), Origin::SchurianFromGroup)?;
        if s.color != orb.color_matrix() {
            return Err(Error::Inconsistent(
                "orbital order differs from row-major first occurrence".into(),
            ));
        }
        Ok(s)
    }

    fn build(n: usize, color: Vec<usize>, origin: Origin) -> Self {
        let r = color.iter().copied().max().map_or(0, |m| m + 1);
        let mut dual = vec![usize::MAX; r];
        let mut rep = vec![usize::MAX; r];
        let mut valences = vec![0; r];
        for u in 0..n {
            for v in 0..n {
                let k = color[u * n + v];
                if dual[k] == usize::MAX {
                    dual[k] = color[v * n + u];
                    rep[k] = u * n + v;
                }
            }
        }
        for v in 0..n {
            valences[color[v]] += 1;
        }
        let mut p = vec![0u32; r * r * r];
        for (k, &pair) in rep.iter().enumerate() {
            let (u, v) = (pair / n, pair % n);
            for w in 0..n {
                let (i, j) = (color[u * n + w], color[w * n + v]);
                p[(i * r + j) * r + k] += 1;
            }
        }
        Scheme {
            n,
            color,
            dual,
            valences,
            origin,
            tensor: IntersectionTensor { classes: r, p },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of classes `d + 1`.
    pub fn rank(&self) -> usize {
        self.dual.len()
    }

    /// Number of nontrivial classes `d`.
    pub fn d(&self) -> usize {
        self.rank().saturating_sub(1)
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        self.color[u * self.n + v]
    }

    pub fn color_matrix(&self) -> &[usize] {
        &self.color
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn valence(&self, i: usize) -> usize {
        self.valences[i]
    }

    pub fn valences(&self) -> &[usize] {
        &self.valences
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn tensor(&self) -> &IntersectionTensor {
        &self.tensor
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        verify_color_matrix(self.n, &self.color)
    }

    fn check_class(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rank(),
            });
        }
        Ok(())
    }

    fn check_point(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::PointOutOfRange {
                point: v,
                degree: self.n,
            });
        }
        Ok(())
    }

    /// `N_i(v) = {u : (v, u) ∈ R_i}`, ascending.
    pub fn neighborhood(&self, i: usize, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.color(v, u) == i).collect()
    }

    pub fn adjacency_matrix(&self, i: usize) -> Result<ExactMatrix> {
        self.check_class(i)?;
        Ok(ExactMatrix::from_fn(self.n, self.n, |u, v| {
            int((self.color(u, v) == i) as i64)
        }))
    }

    /// Diagonal indicator of `N_i(v)`.
    pub fn dual_idempotent(&self, i: usize, v: usize) -> Result<ExactMatrix> {
        self.check_class(i)?;
        self.check_point(v)?;
        Ok(ExactMatrix::from_fn(self.n, self.n, |a, b| {
            int((a == b && self.color(v, a) == i) as i64)
        }))
    }

    pub fn thinness(&self) -> Thinness {
        if self.valences.iter().all(|&k| k == 1) {
            Thinness::Thin
        } else if self.valences.iter().all(|&k| k <= 2) {
            Thinness::QuasiThin
        } else {
            Thinness::Neither
        }
    }

    pub fn is_quasi_thin(&self) -> bool {
        self.thinness() != Thinness::Neither
    }

    /// Checks `A_i A_j = Σ_k p_{ij}^k A_k` for every `(i, j)` by exact matrix
    /// products. Returns the first failing pair.
    pub fn verify_bose_mesner(&self) -> Result<()> {
        let a: Vec<ExactMatrix> = (0..self.rank())
            .map(|i| self.adjacency_matrix(i))
            .collect::<Result<_>>()?;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                let lhs = mat_mul(&a[i], &a[j])?;
                let mut rhs = ExactMatrix::zeros(self.n, self.n);
                for (k, ak) in a.iter().enumerate() {
                    let p = self.tensor.get(i, j, k);
                    if p != 0 {
                        rhs = rhs.add(&ak.scale(&int(p as i64)))?;
                    }
                }
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!(
                        "A_{i} A_{j} is not the combination given by the intersection numbers"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether every generator of `group` preserves every color.
    pub fn check_automorphisms(&self, group: &PermGroup) -> Result<()> {
        if group.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: group.degree(),
            });
        }
        for (gi, g) in group.generators().iter().enumerate() {
            for u in 0..self.n {
                for v in 0..self.n {
                    if self.color(g.apply(u), g.apply(v)) != self.color(u, v) {
                        return Err(Error::NotAnAutomorphism {
                            generator: gi,
                            u,
                            v,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the classes are exactly the orbitals of `group`.
    pub fn is_orbital_scheme_of(&self, group: &PermGroup) -> Result<bool> {
        if self.check_automorphisms(group).is_err() {
            return Ok(false);
        }
        let orb = orbitals(group)?;
        Ok(orb.rank() == self.rank())
    }
}
