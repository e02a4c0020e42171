use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// Relations partition the pairs and relation 0 is exactly the diagonal.
    As1,
    /// The transpose of every relation is a relation.
    As2,
    /// Intersection numbers are well defined.
    As3,
}

/// First violation found for one axiom. Colors are the labels of the input
/// matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub axiom: Axiom,
    pub pairs: Vec<(usize, usize)>,
    pub colors: Vec<usize>,
    pub counts: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub n: usize,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "all axioms hold on {} points", self.n);
        }
        for (i, w) in self.witnesses.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?}: {}", w.axiom, w.detail)?;
        }
        Ok(())
    }
}

/// Checks (AS1)–(AS3) exhaustively on a raw `n × n` color matrix with
/// arbitrary labels. AS3 is checked by comparing, for every pair, the
/// multiset of `(color(u,w), color(w,v))` over all `w` with the one from
/// the first pair of the same color.
pub fn verify_color_matrix(n: usize, color: &[usize]) -> AxiomReport {
    assert_eq!(color.len(), n * n, "color matrix must be n × n");
    let c = |u: usize, v: usize| color[u * n + v];
    let mut witnesses = Vec::new();

    // AS1
    if n > 0 {
        let diag = c(0, 0);
        if let Some(u) = (0..n).find(|&u| c(u, u) != diag) {
            witnesses.push(Witness {
                axiom: Axiom::As1,
                pairs: vec![(0, 0), (u, u)],
                colors: vec![diag, c(u, u)],
                counts: vec![],
                detail: format!(
                    "diagonal pairs (0,0) and ({u},{u}) have colors {diag} and {}",
                    c(u, u)
                ),
            });
        } else if let Some((u, v)) = (0..n * n)
            .map(|p| (p / n, p % n))
            .find(|&(u, v)| u != v && c(u, v) == diag)
        {
            witnesses.push(Witness {
                axiom: Axiom::As1,
                pairs: vec![(u, v)],
                colors: vec![diag],
                counts: vec![],
                detail: format!("off-diagonal pair ({u},{v}) has the diagonal color {diag}"),
            });
        }
    }

    // AS2
    let mut dual: HashMap<usize, ((usize, usize), usize)> = HashMap::new();
    for u in 0..n {
        for v in 0..n {
            let k = c(u, v);
            let t = c(v, u);
            match dual.get(&k) {
                None => {
                    dual.insert(k, ((u, v), t));
                }
                Some(&(rep, expected)) if expected != t => {
                    witnesses.push(Witness {
                        axiom: Axiom::As2,
                        pairs: vec![rep, (u, v)],
                        colors: vec![k, expected, t],
                        counts: vec![],
                        detail: format!(
                            "pairs {rep:?} and ({u},{v}) share color {k} but their transposes have colors {expected} and {t}"
                        ),
                    });
                    break;
                }
                _ => {}
            }
        }
        if witnesses.iter().any(|w| w.axiom == Axiom::As2) {
            break;
        }
    }

    // AS3
    let profile = |u: usize, v: usize| {
        let mut p: Vec<(usize, usize)> = (0..n).map(|w| (c(u, w), c(w, v))).collect();
        p.sort_unstable();
        p
    };
    type Profile = Vec<(usize, usize)>;
    let mut reps: HashMap<usize, ((usize, usize), Profile)> = HashMap::new();
    'outer: for u in 0..n {
        for v in 0..n {
            let k = c(u, v);
            let prof = profile(u, v);
            match reps.get(&k) {
                None => {
                    reps.insert(k, ((u, v), prof));
                }
                Some((rep, rep_prof)) if *rep_prof != prof => {
                    let (i, j) = first_difference(rep_prof, &prof);
                    let count = |p: &[(usize, usize)]| p.iter().filter(|&&x| x == (i, j)).count();
                    let (a, b) = (count(rep_prof), count(&prof));
                    witnesses.push(Witness {
                        axiom: Axiom::As3,
                        pairs: vec![*rep, (u, v)],
                        colors: vec![i, j, k],
                        counts: vec![a, b],
                        detail: format!(
                            "pairs {rep:?} and ({u},{v}) have color {k} but {a} vs {b} points w with colors ({i}, {j})"
                        ),
                    });
                    break 'outer;
                }
                _ => {}
            }
        }
    }

    AxiomReport { n, witnesses }
}

/// First `(i, j)` whose multiplicity differs between two sorted profiles.
fn first_difference(a: &[(usize, usize)], b: &[(usize, usize)]) -> (usize, usize) {
    let (mut x, mut y) = (0, 0);
    loop {
        match (a.get(x), b.get(y)) {
            (Some(p), Some(q)) if p == q => {
                x += 1;
                y += 1;
            }
            (Some(p), Some(q)) => return (*p).min(*q),
            (Some(p), None) => return *p,
            (None, Some(q)) => return *q,
            (None, None) => unreachable!("profiles differ"),
        }
    }
}
