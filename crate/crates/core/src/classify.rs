//! Two routes to the same verdicts for quasi-thin Schurian schemes: one
//! read off the diamond pairs, one from comparing `dim T⁰`, `dim T` and
//! `dim T̃`. A report carries both, and a consistency flag.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permcore::{find_regular_subgroup, PermGroup};
use crate::schemes::{Scheme, Thinness};
use crate::terwilliger::{
    diamond_pairs, is_diamond, peirce_block, unordered_pairs, wedderburn_check, DiamondPair,
    SpaceDims, TerwilligerSpaces, WedderburnReport,
};

/// A scheme, optionally with the group it came from.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub scheme: Scheme,
    pub group: Option<PermGroup>,
}

impl Instance {
    pub fn from_group(name: impl Into<String>, group: PermGroup) -> Result<Self> {
        let scheme = Scheme::from_orbitals(&group)?;
        Ok(Instance {
            name: name.into(),
            scheme,
            group: Some(group),
        })
    }

    pub fn from_scheme(name: impl Into<String>, scheme: Scheme) -> Self {
        Instance {
            name: name.into(),
            scheme,
            group: None,
        }
    }
}

fn require_quasi_thin(scheme: &Scheme) -> Result<Vec<DiamondPair>> {
    if !scheme.is_quasi_thin() {
        return Err(Error::NotQuasiThin);
    }
    diamond_pairs(scheme)
}

/// Classes `ℓ` of valency 2 with `(i, ℓ)` and `(ℓ, k)` both non-diamond.
fn bridges(scheme: &Scheme, i: usize, k: usize) -> impl Iterator<Item = usize> + '_ {
    (0..scheme.rank()).filter(move |&l| {
        scheme.valence(l) == 2 && !is_diamond(scheme, i, l) && !is_diamond(scheme, l, k)
    })
}

/// Triple regularity from diamond pairs: no diamond pair `(i, k)` has a
/// valency-2 class `ℓ` with `(i, ℓ)` and `(ℓ, k)` both non-diamond.
///
/// Without the valency restriction `ℓ = 0` would always qualify.
pub fn triply_regular_structural(scheme: &Scheme) -> Result<bool> {
    let pairs = require_quasi_thin(scheme)?;
    Ok(pairs
        .iter()
        .all(|p| bridges(scheme, p.i, p.k).next().is_none()))
}

/// `T = T̃` from diamond pairs: every diamond pair has such a bridge `ℓ`.
pub fn t_equals_centralizer_structural(scheme: &Scheme) -> Result<bool> {
    let pairs = require_quasi_thin(scheme)?;
    Ok(pairs
        .iter()
        .all(|p| bridges(scheme, p.i, p.k).next().is_some()))
}

/// Triple transitivity from diamond pairs: there are none.
pub fn triply_transitive_structural(scheme: &Scheme) -> Result<bool> {
    Ok(require_quasi_thin(scheme)?.is_empty())
}

/// A regular subgroup of a non-thin quasi-thin group predicts triple
/// transitivity. `None` when the predictor does not apply or finds nothing.
pub fn regular_subgroup_predictor(scheme: &Scheme, group: &PermGroup) -> Result<Option<PermGroup>> {
    if scheme.thinness() != Thinness::QuasiThin {
        return Ok(None);
    }
    find_regular_subgroup(group)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralVerdicts {
    pub triply_regular: Option<bool>,
    pub t_equals_t_tilde: Option<bool>,
    pub triply_transitive: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteVerdicts {
    pub t0_equals_t: bool,
    pub t_equals_t_tilde: Option<bool>,
    pub all_equal: Option<bool>,
}

/// Peirce dimensions of one diamond pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondBlock {
    pub i: usize,
    pub k: usize,
    pub t0: usize,
    pub t: usize,
    pub t_tilde: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularSubgroup {
    pub order: usize,
    pub predicts_triply_transitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub name: String,
    pub n: usize,
    pub rank: usize,
    pub valences: Vec<usize>,
    pub thinness: Thinness,
    pub group_order: Option<usize>,
    pub dims: SpaceDims,
    pub second_dims: Option<SpaceDims>,
    pub diamond_pairs: Vec<DiamondPair>,
    pub unordered_diamond_pairs: Vec<(usize, usize)>,
    pub diamond_blocks: Vec<DiamondBlock>,
    pub structural: StructuralVerdicts,
    pub brute: BruteVerdicts,
    pub regular_subgroup: Option<RegularSubgroup>,
    pub t1_equals_t: bool,
    pub schurian: Option<bool>,
    pub wedderburn: Option<WedderburnReport>,
    pub consistent: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub base_point: usize,
    /// Recompute the dimensions at a second base point.
    pub second_base_point: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            base_point: 0,
            second_base_point: true,
        }
    }
}

pub fn classify(instance: &Instance) -> Result<ClassificationReport> {
    classify_with(instance, ClassifyOptions::default())
}

pub fn classify_with(instance: &Instance, opts: ClassifyOptions) -> Result<ClassificationReport> {
    let scheme = &instance.scheme;
    let group = instance.group.as_ref();
    let v = opts.base_point;
    let n = scheme.n();
    let mut notes = Vec::new();

    let spaces = TerwilligerSpaces::compute(scheme, group, v)?;
    spaces.check_inclusions()?;
    let dims = spaces.dims();

    let second_dims = match (opts.second_base_point, n) {
        (true, n) if n > 1 => {
            let w = if v == n - 1 { 0 } else { n - 1 };
            let d = TerwilligerSpaces::compute(scheme, group, w)?.dims();
            if (d.t0, d.t, d.t_tilde) != (dims.t0, dims.t, dims.t_tilde) && group.is_some() {
                notes.push(format!("dimensions at base points {v} and {w} differ"));
            }
            Some(d)
        }
        _ => None,
    };

    let brute = BruteVerdicts {
        t0_equals_t: dims.t0 == dims.t,
        t_equals_t_tilde: dims.t_tilde.map(|tt| tt == dims.t),
        all_equal: dims.t_tilde.map(|tt| dims.t0 == dims.t && dims.t == tt),
    };

    let schurian = group.map(|g| scheme.is_orbital_scheme_of(g)).transpose()?;

    let quasi_thin = scheme.is_quasi_thin();
    let (pairs, structural) = if quasi_thin {
        let pairs = diamond_pairs(scheme)?;
        let s = StructuralVerdicts {
            triply_regular: Some(triply_regular_structural(scheme)?),
            t_equals_t_tilde: group
                .map(|_| t_equals_centralizer_structural(scheme))
                .transpose()?,
            triply_transitive: Some(pairs.is_empty()),
        };
        (pairs, s)
    } else {
        notes.push("not quasi-thin: structural verdicts do not apply".into());
        (Vec::new(), StructuralVerdicts::default())
    };

    let mut diamond_blocks = Vec::new();
    for p in &pairs {
        let t0 = peirce_block(&spaces.t0, scheme, p.i, p.k, v)?.dim;
        let t = peirce_block(&spaces.t, scheme, p.i, p.k, v)?.dim;
        let t_tilde = match &spaces.t_tilde {
            Some(b) => Some(peirce_block(b, scheme, p.i, p.k, v)?.dim),
            None => None,
        };
        diamond_blocks.push(DiamondBlock {
            i: p.i,
            k: p.k,
            t0,
            t,
            t_tilde,
        });
    }

    let regular_subgroup = match group {
        Some(g) => regular_subgroup_predictor(scheme, g)?.map(|r| RegularSubgroup {
            order: r.order(),
            predicts_triply_transitive: true,
        }),
        None => None,
    };

    let mut consistent = true;
    let mut disagree = |what: &str, s: Option<bool>, b: Option<bool>| {
        if let (Some(s), Some(b)) = (s, b) {
            if s != b {
                notes.push(format!("{what}: structural {s}, brute {b}"));
                consistent = false;
            }
        }
    };
    disagree(
        "triply regular",
        structural.triply_regular,
        Some(brute.t0_equals_t),
    );
    disagree(
        "T = T~",
        structural.t_equals_t_tilde,
        brute.t_equals_t_tilde,
    );
    disagree(
        "triply transitive",
        structural.triply_transitive,
        brute.all_equal,
    );
    if regular_subgroup.is_some() && brute.all_equal == Some(false) {
        notes.push("regular subgroup present but not triply transitive".into());
        consistent = false;
    }
    if brute.all_equal == Some(true) && schurian == Some(false) {
        notes.push("triply transitive but the classes are not the orbitals of the group".into());
        consistent = false;
    }

    let t1_equals_t = dims.t1 == dims.t;
    if !t1_equals_t {
        notes.push(format!(
            "dim T1 = {} differs from dim T = {}",
            dims.t1, dims.t
        ));
    }

    let wedderburn = match group {
        Some(g) if quasi_thin => Some(wedderburn_check(
            scheme,
            g,
            v,
            dims.t,
            brute.all_equal == Some(true),
        )?),
        _ => None,
    };

    Ok(ClassificationReport {
        name: instance.name.clone(),
        n,
        rank: scheme.rank(),
        valences: scheme.valences().to_vec(),
        thinness: scheme.thinness(),
        group_order: group.map(PermGroup::order),
        dims,
        second_dims,
        unordered_diamond_pairs: unordered_pairs(&pairs),
        diamond_pairs: pairs,
        diamond_blocks,
        structural,
        brute,
        regular_subgroup,
        t1_equals_t,
        schurian,
        wedderburn,
        consistent,
        notes,
    })
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

impl std::fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "instance: {}", self.name)?;
        write!(f, "points: {}", self.n)?;
        if let Some(o) = self.group_order {
            write!(f, ", group order {o}")?;
        }
        writeln!(f)?;
        writeln!(f, "rank: {} ({:?})", self.rank, self.thinness)?;
        let sizes: Vec<String> = self.valences.iter().map(usize::to_string).collect();
        writeln!(f, "orbit sizes: {}", sizes.join(" "))?;
        let d = &self.dims;
        writeln!(f, "base point {}:", d.base_point)?;
        writeln!(f, "  dim T0 = {}", d.t0)?;
        writeln!(f, "  dim T1 = {}", d.t1)?;
        writeln!(f, "  dim T  = {}", d.t)?;
        match d.t_tilde {
            Some(tt) => writeln!(f, "  dim T~ = {tt}")?,
            None => writeln!(f, "  dim T~ = n/a (no group)")?,
        }
        if let Some(s) = &self.second_dims {
            let tt = s.t_tilde.map_or("n/a".to_string(), |x| x.to_string());
            writeln!(
                f,
                "base point {}: T0 {} T1 {} T {} T~ {}",
                s.base_point, s.t0, s.t1, s.t, tt
            )?;
        }
        writeln!(f, "diamond pairs: {}", self.unordered_diamond_pairs.len())?;
        for p in &self.diamond_pairs {
            let w = p.witness;
            writeln!(
                f,
                "  ({}, {}) via {}: v={} y={{{}, {}}} u={} z={}",
                p.i, p.k, p.j, w.v, w.y1, w.y2, w.u, w.z
            )?;
        }
        for b in &self.diamond_blocks {
            let tt = b.t_tilde.map_or("n/a".to_string(), |x| x.to_string());
            writeln!(
                f,
                "  block ({}, {}): T0 {} T {} T~ {}",
                b.i, b.k, b.t0, b.t, tt
            )?;
        }
        writeln!(f, "verdicts (structural / brute):")?;
        writeln!(
            f,
            "  triply regular:    {} / {}",
            yes_no(self.structural.triply_regular),
            yes_no(Some(self.brute.t0_equals_t))
        )?;
        writeln!(
            f,
            "  T = T~:            {} / {}",
            yes_no(self.structural.t_equals_t_tilde),
            yes_no(self.brute.t_equals_t_tilde)
        )?;
        writeln!(
            f,
            "  triply transitive: {} / {}",
            yes_no(self.structural.triply_transitive),
            yes_no(self.brute.all_equal)
        )?;
        match &self.regular_subgroup {
            Some(r) => writeln!(f, "regular subgroup: order {}", r.order)?,
            None => writeln!(f, "regular subgroup: none")?,
        }
        if let Some(WedderburnReport::Checked {
            s,
            t,
            predicted,
            actual,
            holds,
        }) = &self.wedderburn
        {
            writeln!(
                f,
                "wedderburn: s = {s}, t = {t}, (s+t)^2 + s^2 = {predicted}, dim T = {actual} ({})",
                if *holds { "holds" } else { "FAILS" }
            )?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        write!(f, "consistent: {}", yes_no(Some(self.consistent)))
    }
}
