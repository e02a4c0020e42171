use crate::error::{Error, Result};

use super::{Caps, PermGroup, Permutation};

/// The action of a group on the right cosets `Hx` of a subgroup by right
/// multiplication, `(Hx, g) ↦ Hxg`.
///
/// Coset 0 is `H` itself; the other labels follow the smallest BFS index
/// of a member of each coset.
#[derive(Clone, Debug)]
pub struct GroupAction {
    source: PermGroup,
    subgroup: PermGroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
    image: PermGroup,
}

impl GroupAction {
    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    /// Number of cosets, i.e. `[G:H]`.
    pub fn degree(&self) -> usize {
        self.cosets.len()
    }

    /// Source-element indices of each coset, ascending.
    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    /// Image of coset `point` under source element `element`.
    pub fn act(&self, element: usize, point: usize) -> usize {
        let rep = self.cosets[point][0];
        self.coset_of[self.source.product(rep, element)]
    }

    pub fn permutation_of(&self, element: usize) -> Permutation {
        Permutation::new((0..self.degree()).map(|x| self.act(element, x)).collect())
            .expect("coset action is a bijection")
    }

    /// The permutation group induced on the cosets, generated by the images
    /// of the source generators.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn into_image(self) -> PermGroup {
        self.image
    }
}

pub fn coset_action(
    group: &PermGroup,
    subgroup_generators: &[Permutation],
    caps: &Caps,
) -> Result<GroupAction> {
    for (i, h) in subgroup_generators.iter().enumerate() {
        if h.degree() != group.degree() || !group.contains(h) {
            return Err(Error::NotASubgroup { index: i });
        }
    }
    let subgroup = PermGroup::generate(group.degree(), subgroup_generators.to_vec(), caps)?;
    let h_idx: Vec<usize> = subgroup
        .elements()
        .iter()
        .map(|h| group.index_of(h).expect("subgroup closed inside group"))
        .collect();

    let mut coset_of = vec![usize::MAX; group.order()];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for x in 0..group.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let label = cosets.len();
        let mut members: Vec<usize> = h_idx.iter().map(|&h| group.product(h, x)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = label;
        }
        cosets.push(members);
    }
    caps.check_degree(cosets.len())?;

    let image_gens: Vec<Permutation> = group
        .generators()
        .iter()
        .map(|g| {
            let gi = group.index_of(g).expect("generator is an element");
            Permutation::new(
                (0..cosets.len())
                    .map(|c| coset_of[group.product(cosets[c][0], gi)])
                    .collect(),
            )
            .expect("coset action is a bijection")
        })
        .collect();
    let image = PermGroup::generate(cosets.len(), image_gens, caps)?;

    Ok(GroupAction {
        source: group.clone(),
        subgroup,
        cosets,
        coset_of,
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::orbitals;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::from_cycles(n, s).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::generate(
            4,
            vec![cyc(4, "(0 1 2 3)"), cyc(4, "(0 1)")],
            &Caps::default(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_subgroup_gives_regular_action() {
        let g = s4();
        let a = coset_action(&g, &[], &Caps::default()).unwrap();
        assert_eq!(a.degree(), 24);
        assert_eq!(a.image().order(), 24);
        assert_eq!(orbitals(a.image()).unwrap().rank(), 24);
    }

    #[test]
    fn whole_group_gives_degree_one() {
        let g = s4();
        let a = coset_action(&g, g.generators(), &Caps::default()).unwrap();
        assert_eq!(a.degree(), 1);
        assert_eq!(a.image().order(), 1);
    }

    #[test]
    fn action_is_a_homomorphism() {
        let g = s4();
        let a = coset_action(&g, &[cyc(4, "(0 1)")], &Caps::default()).unwrap();
        assert_eq!(a.degree(), 12);
        assert_eq!(a.cosets()[0], {
            let mut h = vec![0, g.index_of(&cyc(4, "(0 1)")).unwrap()];
            h.sort();
            h
        });
        for x in 0..a.degree() {
            assert_eq!(a.act(0, x), x);
            for gi in 0..g.order() {
                for hi in (0..g.order()).step_by(5) {
                    let gh = g.product(gi, hi);
                    assert_eq!(a.act(gh, x), a.act(hi, a.act(gi, x)));
                }
            }
        }
    }

    #[test]
    fn outsider_subgroup_generator_rejected() {
        let g = PermGroup::generate(4, vec![cyc(4, "(0 1 2 3)")], &Caps::default()).unwrap();
        let r = coset_action(&g, &[cyc(4, "(0 1)")], &Caps::default());
        assert!(matches!(r, Err(Error::NotASubgroup { index: 0 })));
    }

    #[test]
    fn natural_action_equivalent_to_stabilizer_cosets() {
        let g = s4();
        let stab = crate::permcore::point_stabilizer(&g, 0).unwrap();
        let a = coset_action(&g, stab.generators(), &Caps::default()).unwrap();
        assert_eq!(a.degree(), 4);
        let o1 = orbitals(&g).unwrap();
        let o2 = orbitals(a.image()).unwrap();
        assert_eq!(o1.rank(), o2.rank());
    }
}
