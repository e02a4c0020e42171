use std::collections::VecDeque;

use crate::error::Result;

use super::{PermGroup, Permutation};

/// Orbits of the group generated by `generators` on `{0, .., degree-1}`.
///
/// Each orbit is sorted and orbits are ordered by their smallest point,
/// except that the orbit of `base` (when given) comes first.
pub fn orbits(generators: &[Permutation], degree: usize, base: Option<usize>) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; degree];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..degree {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[start] = id;
        let mut orbit = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.apply(x);
                if label[y] == usize::MAX {
                    label[y] = id;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    if let Some(b) = base.filter(|&b| b < degree) {
        let pos = label[b];
        let first = out.remove(pos);
        out.insert(0, first);
    }
    out
}

/// Orbits of `G` on ordered pairs of points.
///
/// The diagonal orbital is index 0 and the remaining orbitals are ordered by
/// their lexicographically smallest pair. `color[u * n + v]` is the orbital
/// containing `(u, v)`.
#[derive(Clone, Debug)]
pub struct Orbitals {
    degree: usize,
    classes: Vec<Vec<(usize, usize)>>,
    color: Vec<usize>,
}

impl Orbitals {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<(usize, usize)>] {
        &self.classes
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        self.color[u * self.degree + v]
    }

    pub fn color_matrix(&self) -> &[usize] {
        &self.color
    }

    /// `Δ_i(base) = {u : (base, u) ∈ O_i}` for every orbital `i`.
    pub fn suborbits(&self, base: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.rank()];
        for u in 0..self.degree {
            out[self.color(base, u)].push(u);
        }
        out
    }

    /// Index of the transposed orbital for each orbital.
    pub fn transposes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| {
                let (u, v) = c[0];
                self.color(v, u)
            })
            .collect()
    }
}

/// Orbits of the group generated by `generators` on ordered pairs, labelled
/// in order of their lexicographically smallest pair.
pub fn pair_orbits(generators: &[Permutation], degree: usize) -> Vec<Vec<(usize, usize)>> {
    let n = degree;
    let mut label = vec![usize::MAX; n * n];
    let mut classes = Vec::new();
    for start in 0..n * n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        label[start] = id;
        let mut class = vec![(start / n, start % n)];
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            let (u, v) = (p / n, p % n);
            for g in generators {
                let q = g.apply(u) * n + g.apply(v);
                if label[q] == usize::MAX {
                    label[q] = id;
                    class.push((q / n, q % n));
                    queue.push_back(q);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

pub fn orbitals(group: &PermGroup) -> Result<Orbitals> {
    group.require_transitive()?;
    let n = group.degree();
    let classes = pair_orbits(group.generators(), n);
    let mut color = vec![0; n * n];
    for (i, c) in classes.iter().enumerate() {
        for &(u, v) in c {
            color[u * n + v] = i;
        }
    }
    Ok(Orbitals {
        degree: n,
        classes,
        color,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::permcore::Caps;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::from_cycles(n, s).unwrap()
    }

    #[test]
    fn trivial_group_orbits_are_singletons() {
        let o = orbits(&[], 4, None);
        assert_eq!(o, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn base_orbit_first() {
        let g = [cyc(5, "(0 1)(3 4)")];
        assert_eq!(orbits(&g, 5, None), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(
            orbits(&g, 5, Some(4)),
            vec![vec![3, 4], vec![0, 1], vec![2]]
        );
    }

    #[test]
    fn two_transitive_has_two_orbitals() {
        let s4 = PermGroup::generate(
            4,
            vec![cyc(4, "(0 1 2 3)"), cyc(4, "(0 1)")],
            &Caps::default(),
        )
        .unwrap();
        let o = orbitals(&s4).unwrap();
        assert_eq!(o.rank(), 2);
        assert_eq!(o.classes()[0], vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn regular_group_rank_equals_order() {
        let c6 = PermGroup::generate(6, vec![cyc(6, "(0 1 2 3 4 5)")], &Caps::default()).unwrap();
        let o = orbitals(&c6).unwrap();
        assert_eq!(o.rank(), 6);
        // orbital i contains (0, i)
        for i in 0..6 {
            assert_eq!(o.color(0, i), i);
        }
        assert_eq!(o.transposes(), vec![0, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::generate(4, vec![cyc(4, "(0 1)")], &Caps::default()).unwrap();
        assert!(matches!(
            orbitals(&g),
            Err(Error::NotTransitive { orbits: 3 })
        ));
    }
}
