//! Test-only oracles. Everything here is deliberately naive and shares no
//! code with the library beyond building groups and schemes.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schemeforge_core::catalog::Preset;
use schemeforge_core::classify::Instance;
use schemeforge_core::permcore::{coset_action, Caps, PermGroup, Permutation};
use schemeforge_core::schemes::Scheme;

/// A prime large enough that ranks of small 0/1 systems agree with ℚ.
pub const P: u64 = 2_147_483_647;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

/// Dense echelon basis over GF(P).
#[derive(Clone)]
pub struct ModBasis {
    len: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModBasis {
    pub fn new(len: usize) -> Self {
        ModBasis {
            len,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) {
        for (p, row) in &self.rows {
            let f = v[*p];
            if f != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + P - f * r % P) % P;
                }
            }
        }
    }

    /// Adds `v` if independent; returns whether it was.
    pub fn add(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.len);
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[p]);
        for x in v.iter_mut() {
            *x = *x * inv % P;
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[p];
            if f != 0 {
                for (r, x) in row.iter_mut().zip(&v) {
                    *r = (*r + P - f * x % P) % P;
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    pub fn vectors(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

pub fn mat_mul_mod(n: usize, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut c = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % P;
            }
        }
    }
    c
}

/// Dimension of the algebra generated by `gens` (with identity), by
/// multiplying every pair of basis elements until nothing new appears.
pub fn closure_dim(n: usize, gens: &[Vec<u64>]) -> usize {
    let mut basis = ModBasis::new(n * n);
    let id: Vec<u64> = (0..n * n).map(|x| u64::from(x / n == x % n)).collect();
    basis.add(&id);
    for g in gens {
        basis.add(g);
    }
    loop {
        let current = basis.vectors();
        let mut grew = false;
        for a in &current {
            for b in &current {
                if basis.add(&mat_mul_mod(n, a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return basis.dim();
        }
    }
}

pub fn color_at(s: &Scheme, u: usize, v: usize) -> usize {
    s.color_matrix()[u * s.n() + v]
}

pub fn neighbors(s: &Scheme, i: usize, v: usize) -> Vec<usize> {
    (0..s.n()).filter(|&u| color_at(s, v, u) == i).collect()
}

/// `p_{ij}^k` counted at the first pair of color `k`.
pub fn intersection_number(s: &Scheme, i: usize, j: usize, k: usize) -> usize {
    let n = s.n();
    let (x, y) = (0..n * n)
        .map(|p| (p / n, p % n))
        .find(|&(x, y)| color_at(s, x, y) == k)
        .unwrap();
    (0..n)
        .filter(|&z| color_at(s, x, z) == i && color_at(s, z, y) == j)
        .count()
}

pub fn adjacency_mod(s: &Scheme, i: usize) -> Vec<u64> {
    s.color_matrix()
        .iter()
        .map(|&c| u64::from(c == i))
        .collect()
}

pub fn idempotent_mod(s: &Scheme, i: usize, v: usize) -> Vec<u64> {
    let n = s.n();
    (0..n * n)
        .map(|x| u64::from(x / n == x % n && color_at(s, v, x / n) == i))
        .collect()
}

/// `E*_i A_j E*_k` as a dense 0/1 vector.
pub fn monomial_mod(s: &Scheme, i: usize, j: usize, k: usize, v: usize) -> Vec<u64> {
    let n = s.n();
    (0..n * n)
        .map(|x| {
            let (a, b) = (x / n, x % n);
            u64::from(color_at(s, v, a) == i && color_at(s, a, b) == j && color_at(s, v, b) == k)
        })
        .collect()
}

pub fn t0_dim(s: &Scheme, v: usize) -> usize {
    let r = s.rank();
    let mut b = ModBasis::new(s.n() * s.n());
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                b.add(&monomial_mod(s, i, j, k, v));
            }
        }
    }
    b.dim()
}

pub fn t_dim(s: &Scheme, v: usize) -> usize {
    let mut gens = Vec::new();
    for i in 0..s.rank() {
        gens.push(adjacency_mod(s, i));
        gens.push(idempotent_mod(s, i, v));
    }
    closure_dim(s.n(), &gens)
}

/// Dimension of the commutant of `G_v`: orbits of the stabilizer on
/// ordered pairs, merged by union-find over every stabilizer element.
pub fn centralizer_dim(g: &PermGroup, v: usize) -> usize {
    let n = g.degree();
    let mut parent: Vec<usize> = (0..n * n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for h in g.elements().iter().filter(|h| h.apply(v) == v) {
        for a in 0..n {
            for b in 0..n {
                let (x, y) = (
                    find(&mut parent, a * n + b),
                    find(&mut parent, h.apply(a) * n + h.apply(b)),
                );
                parent[x] = y;
            }
        }
    }
    (0..n * n).filter(|&x| find(&mut parent, x) == x).count()
}

/// Diamond pairs by looking for the configuration directly: two classes of
/// valency 2 whose neighborhoods at `v` are joined by four arcs of one color.
pub fn diamond_oracle(s: &Scheme, v: usize) -> BTreeSet<(usize, usize)> {
    let r = s.rank();
    let mut out = BTreeSet::new();
    for i in 0..r {
        for k in 0..r {
            let (ni, nk) = (neighbors(s, i, v), neighbors(s, k, v));
            if ni.len() != 2 || nk.len() != 2 {
                continue;
            }
            let colors: HashSet<usize> = ni
                .iter()
                .flat_map(|&y| nk.iter().map(move |&u| (y, u)))
                .map(|(y, u)| color_at(s, y, u))
                .collect();
            if colors.len() == 1 {
                out.insert((i, k));
            }
        }
    }
    out
}

/// Non-central involutions give faithful coset actions with stabilizer of
/// order 2, so every instance is quasi-thin.
pub fn random_quasi_thin(seed: u64) -> Option<(String, PermGroup)> {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(4..=7);
    let random_perm = |rng: &mut ChaCha8Rng| {
        let mut v: Vec<usize> = (0..m).collect();
        v.shuffle(rng);
        Permutation::new(v).unwrap()
    };
    let gens = vec![random_perm(&mut rng), random_perm(&mut rng)];
    let g = PermGroup::generate(
        m,
        gens,
        &Caps {
            group: 72,
            degree: m,
        },
    )
    .ok()?;
    let central = |b: &Permutation| g.generators().iter().all(|x| b.then(x) == x.then(b));
    let mut involutions: Vec<&Permutation> = g
        .elements()
        .iter()
        .filter(|p| p.order() == 2 && !central(p))
        .collect();
    if involutions.is_empty() {
        return None;
    }
    involutions.shuffle(&mut rng);
    let b = involutions[0].clone();
    let image = coset_action(&g, &[b], &caps).ok()?.into_image();
    Some((format!("random-{seed}-order{}", g.order()), image))
}

/// The first `count` usable seeds from 0 upwards.
pub fn random_corpus(count: usize) -> Vec<Instance> {
    (0u64..)
        .filter_map(random_quasi_thin)
        .take(count)
        .map(|(name, g)| Instance::from_group(name, g).unwrap())
        .collect()
}

pub fn preset(name: &str) -> Instance {
    Preset::parse(name)
        .unwrap()
        .instance(&Caps::default())
        .unwrap()
}
