use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::ExactMatrix;

/// Sparse vector: `(index, value)` pairs with strictly increasing indices and
/// no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, BigRational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    /// Entries must already be sorted by index, distinct and nonzero.
    pub fn from_sorted(entries: Vec<(usize, BigRational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, x)| !x.is_zero()));
        SparseVec { entries }
    }

    /// Sums duplicate indices and drops zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, BigRational)>) -> Self {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, x) in entries {
            *acc.entry(i).or_insert_with(BigRational::zero) += x;
        }
        SparseVec::from_map(acc)
    }

    fn from_map(acc: BTreeMap<usize, BigRational>) -> Self {
        SparseVec {
            entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    /// 0/1 indicator of a set of positions.
    pub fn indicator(positions: impl IntoIterator<Item = usize>) -> Self {
        SparseVec::from_entries(positions.into_iter().map(|i| (i, BigRational::one())))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigRational)> + '_ {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn get(&self, index: usize) -> Option<&BigRational> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn leading(&self) -> Option<(usize, &BigRational)> {
        self.entries.first().map(|(i, x)| (*i, x))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, k: &BigRational) -> SparseVec {
        if k.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x * k)).collect(),
        }
    }

    /// `self - k * other`.
    pub fn sub_scaled(&self, k: &BigRational, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, xa)), Some((ib, xb))) => {
                    if ia < ib {
                        out.push((*ia, xa.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, -(k * xb)));
                        b.next();
                    } else {
                        let v = xa - k * xb;
                        if !v.is_zero() {
                            out.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, xa)), None) => {
                    out.push((*ia, xa.clone()));
                    a.next();
                }
                (None, Some((ib, xb))) => {
                    out.push((*ib, -(k * xb)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec::from_sorted(out)
    }
}

/// Product of two `n × n` matrices given as row-major sparse vectors.
pub fn sparse_mat_mul(n: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut b_rows: Vec<Vec<(usize, &BigRational)>> = vec![Vec::new(); n];
    for (i, x) in b.iter() {
        b_rows[i / n].push((i % n, x));
    }
    let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
    for (i, x) in a.iter() {
        let (r, k) = (i / n, i % n);
        for &(c, y) in &b_rows[k] {
            *acc.entry(r * n + c).or_insert_with(BigRational::zero) += x * y;
        }
    }
    SparseVec::from_map(acc)
}

/// A subspace of `Q^ambient` kept in reduced row-echelon form.
///
/// Rows are keyed by pivot column; every pivot entry is 1 and every other
/// row is zero in that column. Vectors are reduced against the rows and,
/// if a residue survives, it becomes a new row with its first nonzero
/// column as pivot.
///
/// Mutation is single-writer. [`SpanBasis::reduce`] and
/// [`SpanBasis::contains`] take `&self` and may run concurrently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanBasis {
    ambient: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl SpanBasis {
    pub fn new(ambient: usize) -> Self {
        SpanBasis {
            ambient,
            rows: BTreeMap::new(),
        }
    }

    /// Span of `n × n` matrices, i.e. ambient dimension `n²`.
    pub fn for_matrices(n: usize) -> Self {
        SpanBasis::new(n * n)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> + '_ {
        self.rows.values()
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, BigRational> = v.iter().map(|(i, x)| (i, x.clone())).collect();
        for (p, coeff) in v.iter() {
            if let Some(row) = self.rows.get(&p) {
                for (c, x) in row.iter() {
                    *acc.entry(c).or_insert_with(BigRational::zero) -= coeff * x;
                }
            }
        }
        SparseVec::from_map(acc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert_vec(&mut self, v: &SparseVec) -> Result<bool> {
        if let Some(m) = v.max_index() {
            if m >= self.ambient {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    bound: self.ambient,
                });
            }
        }
        let residue = self.reduce(v);
        let Some((pivot, lead)) = residue.leading() else {
            return Ok(false);
        };
        let new_row = residue.scale(&lead.recip());
        for row in self.rows.values_mut() {
            if let Some(k) = row.get(pivot).cloned() {
                *row = row.sub_scaled(&k, &new_row);
            }
        }
        self.rows.insert(pivot, new_row);
        Ok(true)
    }

    /// Flattens an `n × n` matrix row-major and inserts it.
    pub fn insert(&mut self, m: &ExactMatrix) -> Result<bool> {
        let n = m.rows();
        if m.cols() != n || n * n != self.ambient {
            let side = (self.ambient as f64).sqrt() as usize;
            return Err(Error::ShapeMismatch {
                expected: (side, side),
                found: m.shape(),
            });
        }
        self.insert_vec(&m.flatten())
    }

    pub fn contains_matrix(&self, m: &ExactMatrix) -> bool {
        self.contains(&m.flatten())
    }

    /// Basis rows re-expanded to `n × n` matrices.
    pub fn matrices(&self, n: usize) -> Vec<ExactMatrix> {
        self.rows()
            .map(|r| ExactMatrix::from_sparse(n, r))
            .collect()
    }

    /// Text dump: one `basis row col value` line per nonzero entry, with
    /// flattened indices split as `n × n`.
    pub fn dump_triples(&self, n: usize) -> String {
        let mut out = String::new();
        for (b, row) in self.rows().enumerate() {
            for (i, x) in row.iter() {
                let _ = writeln!(out, "{b} {} {} {x}", i / n, i % n);
            }
        }
        out
    }
}

/// Left multiplication by a fixed `n × n` matrix, stored by columns.
struct LeftMultiplier {
    n: usize,
    cols: Vec<Vec<(usize, BigRational)>>,
}

impl LeftMultiplier {
    fn new(m: &ExactMatrix) -> Self {
        let n = m.rows();
        let mut cols = vec![Vec::new(); n];
        for (r, c, x) in m.triples() {
            cols[c].push((r, x.clone()));
        }
        LeftMultiplier { n, cols }
    }

    fn apply(&self, v: &SparseVec) -> SparseVec {
        let n = self.n;
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, x) in v.iter() {
            let (k, c) = (i / n, i % n);
            for (r, g) in &self.cols[k] {
                *acc.entry(r * n + c).or_insert_with(BigRational::zero) += g * x;
            }
        }
        SparseVec::from_map(acc)
    }
}

/// Default round cap for an `n × n` closure: `n² + 1`.
pub fn default_round_cap(n: usize) -> usize {
    n * n + 1
}

/// Span of all nonempty products of `generators`, i.e. the algebra they
/// generate.
///
/// Works level by level: the vectors added in one round are multiplied on
/// the left by every generator, and the products that are not already in
/// the span are added. The span of all words is closed under left
/// multiplication by the generators and contains them, so it is reached
/// when a round adds nothing. Each productive round raises the dimension,
/// so at most `n²` rounds are needed. Products within a round are formed and
/// pre-reduced in parallel, then inserted sequentially in a fixed order.
pub fn algebra_closure(generators: &[ExactMatrix], round_cap: Option<usize>) -> Result<SpanBasis> {
    let n = generators.first().map_or(0, ExactMatrix::rows);
    for g in generators {
        if g.shape() != (n, n) {
            return Err(Error::ShapeMismatch {
                expected: (n, n),
                found: g.shape(),
            });
        }
    }
    let cap = round_cap.unwrap_or_else(|| default_round_cap(n));
    let mults: Vec<LeftMultiplier> = generators.iter().map(LeftMultiplier::new).collect();
    let mut basis = SpanBasis::for_matrices(n);
    let mut frontier = Vec::new();
    for g in generators {
        let v = g.flatten();
        if basis.insert_vec(&v)? {
            frontier.push(v);
        }
    }
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        if rounds > cap {
            return Err(Error::ClosureCap { rounds: cap });
        }
        let snapshot = &basis;
        let candidates: Vec<SparseVec> = frontier
            .par_iter()
            .flat_map_iter(|v| mults.iter().map(move |m| m.apply(v)))
            .filter(|p| !snapshot.contains(p))
            .collect();
        let mut next = Vec::new();
        for p in candidates {
            if basis.insert_vec(&p)? {
                next.push(p);
            }
        }
        frontier = next;
    }
    Ok(basis)
}

/// Whether every product of two basis rows (as `n × n` matrices) lies in
/// the span. Exhaustive over ordered pairs.
pub fn is_closed_under_products(basis: &SpanBasis, n: usize) -> bool {
    let rows: Vec<&SparseVec> = basis.rows().collect();
    rows.par_iter().all(|a| {
        rows.iter()
            .all(|b| basis.contains(&sparse_mat_mul(n, a, b)))
    })
}
