use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permcore::GroupSpec;

use super::{Origin, Scheme};

/// Textual scheme description: `{ "n": 5, "color": [[0,1,2,2,1], ...] }`.
///
/// An optional `group` (same format as a group file) supplies a
/// transitive group of automorphisms, which enables the centralizer
/// computations.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SchemeSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub n: usize,
    pub color: Vec<Vec<usize>>,
    #[serde(default)]
    pub group: Option<GroupSpec>,
}

impl SchemeSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_scheme(scheme: &Scheme) -> Self {
        let n = scheme.n();
        SchemeSpec {
            name: None,
            n,
            color: (0..n)
                .map(|u| (0..n).map(|v| scheme.color(u, v)).collect())
                .collect(),
            group: None,
        }
    }

    /// Checks the shape, then builds the scheme (which runs the axiom
    /// verifier).
    pub fn to_scheme(&self) -> Result<Scheme> {
        if self.color.len() != self.n {
            return Err(Error::Parse(format!(
                "color matrix has {} rows, expected {}",
                self.color.len(),
                self.n
            )));
        }
        if let Some((r, row)) = self
            .color
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != self.n)
        {
            return Err(Error::Parse(format!(
                "color row {r} has {} entries, expected {}",
                row.len(),
                self.n
            )));
        }
        let flat: Vec<usize> = self.color.iter().flatten().copied().collect();
        Scheme::from_color_matrix(self.n, &flat, Origin::Ingested)
    }
}
