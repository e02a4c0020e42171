use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{coset_action, Caps, PermGroup, Permutation};

/// Textual group description.
///
/// ```json
/// { "name": "s4", "degree": 4, "generators": [[1,2,3,0],[1,0,2,3]] }
/// { "name": "s4", "degree": 4, "cycles": ["(0 1 2 3)", "(0 1)"],
///   "subgroup": { "cycles": ["(0 1)"] } }
/// ```
///
/// When `subgroup` is present the acting group is the action on its right
/// cosets.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub degree: usize,
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
    #[serde(default)]
    pub cycles: Vec<String>,
    #[serde(default)]
    pub subgroup: Option<SubgroupSpec>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SubgroupSpec {
    #[serde(default)]
    pub generator_indices: Vec<usize>,
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
    #[serde(default)]
    pub cycles: Vec<String>,
}

fn parse_perms(
    degree: usize,
    images: &[Vec<usize>],
    cycles: &[String],
) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for im in images {
        if im.len() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: im.len(),
            });
        }
        out.push(Permutation::new(im.clone())?);
    }
    for c in cycles {
        out.push(Permutation::from_cycles(degree, c)?);
    }
    Ok(out)
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn generator_perms(&self) -> Result<Vec<Permutation>> {
        parse_perms(self.degree, &self.generators, &self.cycles)
    }

    pub fn group(&self, caps: &Caps) -> Result<PermGroup> {
        PermGroup::generate(self.degree, self.generator_perms()?, caps)
    }

    pub fn subgroup_generators(&self) -> Result<Option<Vec<Permutation>>> {
        let Some(sub) = &self.subgroup else {
            return Ok(None);
        };
        let gens = self.generator_perms()?;
        let mut out = Vec::new();
        for &i in &sub.generator_indices {
            out.push(gens.get(i).cloned().ok_or(Error::IndexOutOfRange {
                index: i,
                bound: gens.len(),
            })?);
        }
        out.extend(parse_perms(self.degree, &sub.generators, &sub.cycles)?);
        Ok(Some(out))
    }

    /// The permutation group this spec describes: the group itself, or its
    /// action on the cosets of the given subgroup.
    pub fn acting_group(&self, caps: &Caps) -> Result<PermGroup> {
        let g = self.group(caps)?;
        match self.subgroup_generators()? {
            None => Ok(g),
            Some(h) => Ok(coset_action(&g, &h, caps)?.into_image()),
        }
    }
}
