use std::collections::HashMap;

use crate::error::{Error, Result};

use super::orbit::orbits;
use super::Permutation;

pub const DEFAULT_GROUP_CAP: usize = 20_000;
pub const DEFAULT_DEGREE_CAP: usize = 256;

/// Size limits for enumeration. Exceeding either is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub group: usize,
    pub degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group: DEFAULT_GROUP_CAP,
            degree: DEFAULT_DEGREE_CAP,
        }
    }
}

impl Caps {
    /// Parses `"group=N,degree=M"`; either key may be omitted.
    pub fn parse(text: &str) -> Result<Self> {
        let mut caps = Caps::default();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad cap setting {part:?}")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad cap value in {part:?}")))?;
            match key.trim() {
                "group" => caps.group = value,
                "degree" => caps.degree = value,
                other => return Err(Error::Parse(format!("unknown cap {other:?}"))),
            }
        }
        Ok(caps)
    }

    /// Defaults overridden by the `SCHEMEFORGE_CAPS` environment variable.
    pub fn from_env() -> Result<Self> {
        match std::env::var("SCHEMEFORGE_CAPS") {
            Ok(v) => Caps::parse(&v),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub(crate) fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.degree {
            return Err(Error::DegreeTooLarge {
                degree,
                cap: self.degree,
            });
        }
        Ok(())
    }
}

/// A fully enumerated permutation group.
///
/// Elements are stored in breadth-first discovery order starting from the
/// identity (index 0) and right-multiplying by the generators in the order
/// given. Each element remembers its BFS parent, which yields a generator
/// word witnessing membership.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    parent: Vec<Option<(usize, usize)>>,
}

impl PermGroup {
    pub fn generate(degree: usize, generators: Vec<Permutation>, caps: &Caps) -> Result<Self> {
        caps.check_degree(degree)?;
        if caps.group == 0 {
            return Err(Error::GroupTooLarge { cap: 0 });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut parent = vec![None];
        let mut head = 0;
        while head < elements.len() {
            for (gi, g) in generators.iter().enumerate() {
                let next = elements[head].then(g);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= caps.group {
                    return Err(Error::GroupTooLarge { cap: caps.group });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
                parent.push(Some((head, gi)));
            }
            head += 1;
        }
        Ok(PermGroup {
            degree,
            generators,
            elements,
            index,
            parent,
        })
    }

    /// The subgroup whose elements are exactly `members`, with a small
    /// generating set picked greedily in the order given.
    pub fn from_members(degree: usize, members: &[Permutation], caps: &Caps) -> Result<Self> {
        let mut group = PermGroup::generate(degree, Vec::new(), caps)?;
        for m in members {
            if !group.contains(m) {
                let mut gens = group.generators.clone();
                gens.push(m.clone());
                group = PermGroup::generate(degree, gens, caps)?;
            }
        }
        if group.order() != members.len() {
            return Err(Error::Inconsistent(format!(
                "member list of size {} is not closed (generates {})",
                members.len(),
                group.order()
            )));
        }
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Generator indices whose left-to-right product is element `i`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = i;
        while let Some((p, g)) = self.parent[cur] {
            word.push(g);
            cur = p;
        }
        word.reverse();
        word
    }

    /// Evaluates a generator word.
    pub fn evaluate(&self, word: &[usize]) -> Permutation {
        word.iter()
            .fold(Permutation::identity(self.degree), |acc, &g| {
                acc.then(&self.generators[g])
            })
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].then(&self.elements[b])]
    }

    /// BFS parent links as `(parent element, generator)`; `None` for the identity.
    pub fn parents(&self) -> &[Option<(usize, usize)>] {
        &self.parent
    }

    pub fn orbits(&self, base: Option<usize>) -> Vec<Vec<usize>> {
        orbits(&self.generators, self.degree, base)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits(None).len() == 1
    }

    pub(crate) fn require_transitive(&self) -> Result<()> {
        let n = self.orbits(None).len();
        if n > 1 {
            return Err(Error::NotTransitive { orbits: n });
        }
        Ok(())
    }

    /// Generators with the redundant ones (those already in the span of the
    /// earlier ones) dropped.
    pub fn irredundant_generators(&self, caps: &Caps) -> Result<Vec<Permutation>> {
        let mut kept: Vec<Permutation> = Vec::new();
        let mut span = PermGroup::generate(self.degree, Vec::new(), caps)?;
        for g in &self.generators {
            if !span.contains(g) {
                kept.push(g.clone());
                span = PermGroup::generate(self.degree, kept.clone(), caps)?;
            }
        }
        Ok(kept)
    }
}

/// Subgroup of all elements of `group` fixing `point`, found by filtering the
/// enumerated element list.
pub fn point_stabilizer(group: &PermGroup, point: usize) -> Result<PermGroup> {
    if point >= group.degree() {
        return Err(Error::PointOutOfRange {
            point,
            degree: group.degree(),
        });
    }
    let members: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|g| g.apply(point) == point)
        .cloned()
        .collect();
    let caps = Caps {
        group: group.order().max(1),
        degree: group.degree(),
    };
    PermGroup::from_members(group.degree(), &members, &caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::from_cycles(n, s).unwrap()
    }

    #[test]
    fn cyclic_and_symmetric() {
        let caps = Caps::default();
        let c3 = PermGroup::generate(3, vec![cyc(3, "(0 1 2)")], &caps).unwrap();
        assert_eq!(c3.order(), 3);
        let s3 = PermGroup::generate(3, vec![cyc(3, "(0 1)"), cyc(3, "(0 1 2)")], &caps).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.element(0).is_identity());
    }

    #[test]
    fn words_evaluate_to_their_elements() {
        let caps = Caps::default();
        let g =
            PermGroup::generate(5, vec![cyc(5, "(0 1 2 3 4)"), cyc(5, "(0 1)")], &caps).unwrap();
        assert_eq!(g.order(), 120);
        for (i, e) in g.elements().iter().enumerate() {
            assert_eq!(&g.evaluate(&g.word(i)), e);
        }
    }

    #[test]
    fn cap_exceeded_is_an_error() {
        let caps = Caps {
            group: 50,
            degree: 256,
        };
        let r = PermGroup::generate(5, vec![cyc(5, "(0 1 2 3 4)"), cyc(5, "(0 1)")], &caps);
        assert!(matches!(r, Err(Error::GroupTooLarge { cap: 50 })));
        let caps = Caps {
            group: 100,
            degree: 4,
        };
        let r = PermGroup::generate(5, vec![cyc(5, "(0 1)")], &caps);
        assert!(matches!(r, Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn caps_parse() {
        assert_eq!(
            Caps::parse("group=10,degree=7").unwrap(),
            Caps {
                group: 10,
                degree: 7
            }
        );
        assert_eq!(Caps::parse("degree=9").unwrap().group, DEFAULT_GROUP_CAP);
        assert!(Caps::parse("size=3").is_err());
        assert!(Caps::parse("group=x").is_err());
    }

    #[test]
    fn stabilizers() {
        let caps = Caps::default();
        let s4 = PermGroup::generate(4, vec![cyc(4, "(0 1 2 3)"), cyc(4, "(0 1)")], &caps).unwrap();
        let st = point_stabilizer(&s4, 3).unwrap();
        assert_eq!(st.order(), 6);
        assert!(st.elements().iter().all(|g| g.apply(3) == 3));
        let c4 = PermGroup::generate(4, vec![cyc(4, "(0 1 2 3)")], &caps).unwrap();
        assert_eq!(point_stabilizer(&c4, 0).unwrap().order(), 1);
        assert!(point_stabilizer(&c4, 4).is_err());
    }
}
