//! Named group constructions, catalog files and batch scans.

use std::cmp::Ordering;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_with, ClassificationReport, ClassifyOptions, Instance};
use crate::error::{Error, Result};
use crate::permcore::{coset_action, point_stabilizer, Caps, GroupSpec, PermGroup, Permutation};
use crate::schemes::{Origin, Scheme, SchemeSpec};

/// Built-in transitive groups, each named as on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `a5-cosets`: A5 on the 30 cosets of `⟨(0 1)(2 3)⟩`.
    A5Cosets,
    /// `frobenius56`: the affine group `x ↦ a·x + b` over GF(8), `a ≠ 0`,
    /// on the 28 cosets of a translation subgroup of order 2.
    Frobenius56,
    /// `cyclic-N`: `Z_N` acting regularly.
    Cyclic(usize),
    /// `dihedral-N`: `D_N` on the vertices of an `N`-gon.
    Dihedral(usize),
    /// `s3-regular`: `S3` acting on itself by right multiplication.
    S3Regular,
    /// `affine-N-M`: `⟨x ↦ x+1, x ↦ M·x⟩` on `Z_N`, with `M² ≡ 1 (mod N)`.
    Affine(usize, usize),
    /// `symmetric-N`: `S_N` on `N` points.
    Symmetric(usize),
}

pub const PRESET_FORMS: &[&str] = &[
    "a5-cosets",
    "frobenius56",
    "cyclic-N",
    "dihedral-N",
    "s3-regular",
    "affine-N-M",
    "symmetric-N",
];

fn parse_num(name: &str, text: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| Error::Parse(format!("bad number {text:?} in preset {name:?}")))
}

impl Preset {
    pub fn parse(name: &str) -> Result<Self> {
        let parts: Vec<&str> = name.split('-').collect();
        let p = match parts.as_slice() {
            ["a5", "cosets"] => Preset::A5Cosets,
            ["frobenius56"] => Preset::Frobenius56,
            ["s3", "regular"] => Preset::S3Regular,
            ["cyclic", n] => Preset::Cyclic(parse_num(name, n)?),
            ["dihedral", n] => Preset::Dihedral(parse_num(name, n)?),
            ["symmetric", n] => Preset::Symmetric(parse_num(name, n)?),
            ["affine", n, m] => Preset::Affine(parse_num(name, n)?, parse_num(name, m)?),
            _ => {
                return Err(Error::Parse(format!(
                    "unknown preset {name:?}; expected one of {}",
                    PRESET_FORMS.join(", ")
                )))
            }
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse(msg));
        match self {
            Preset::Cyclic(n) | Preset::Symmetric(n) if n < 1 => {
                bad(format!("{} needs N ≥ 1", self.name()))
            }
            Preset::Dihedral(n) if n < 3 => bad(format!("{} needs N ≥ 3", self.name())),
            Preset::Affine(n, m) if n < 2 || m % n == 1 % n || (m * m) % n != 1 % n => {
                bad(format!("{} needs M² ≡ 1 and M ≢ 1 (mod N)", self.name()))
            }
            _ => Ok(()),
        }
    }

    pub fn name(self) -> String {
        match self {
            Preset::A5Cosets => "a5-cosets".into(),
            Preset::Frobenius56 => "frobenius56".into(),
            Preset::S3Regular => "s3-regular".into(),
            Preset::Cyclic(n) => format!("cyclic-{n}"),
            Preset::Dihedral(n) => format!("dihedral-{n}"),
            Preset::Symmetric(n) => format!("symmetric-{n}"),
            Preset::Affine(n, m) => format!("affine-{n}-{m}"),
        }
    }

    pub fn group(self, caps: &Caps) -> Result<PermGroup> {
        let perm = |images: Vec<usize>| Permutation::new(images);
        match self {
            Preset::A5Cosets => {
                let a5 = PermGroup::generate(
                    5,
                    vec![
                        Permutation::from_cycles(5, "(0 1 2 3 4)")?,
                        Permutation::from_cycles(5, "(0 1 2)")?,
                    ],
                    caps,
                )?;
                let h = Permutation::from_cycles(5, "(0 1)(2 3)")?;
                Ok(coset_action(&a5, &[h], caps)?.into_image())
            }
            Preset::Frobenius56 => {
                // GF(8) = GF(2)[α]/(α³ + α + 1), elements as bit vectors.
                let times_alpha = |x: usize| {
                    let (b0, b1, b2) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
                    b2 | ((b0 ^ b2) << 1) | (b1 << 2)
                };
                let tau = perm((0..8).map(|x| x ^ 1).collect())?;
                let mu = perm((0..8).map(times_alpha).collect())?;
                let g = PermGroup::generate(8, vec![tau.clone(), mu], caps)?;
                Ok(coset_action(&g, &[tau], caps)?.into_image())
            }
            Preset::S3Regular => {
                let s3 = PermGroup::generate(
                    3,
                    vec![
                        Permutation::from_cycles(3, "(0 1 2)")?,
                        Permutation::from_cycles(3, "(0 1)")?,
                    ],
                    caps,
                )?;
                Ok(coset_action(&s3, &[], caps)?.into_image())
            }
            Preset::Cyclic(n) => {
                caps.check_degree(n)?;
                PermGroup::generate(n, vec![perm((0..n).map(|i| (i + 1) % n).collect())?], caps)
            }
            Preset::Dihedral(n) => {
                caps.check_degree(n)?;
                let r = perm((0..n).map(|i| (i + 1) % n).collect())?;
                let s = perm((0..n).map(|i| (n - i) % n).collect())?;
                PermGroup::generate(n, vec![r, s], caps)
            }
            Preset::Affine(n, m) => {
                caps.check_degree(n)?;
                let r = perm((0..n).map(|i| (i + 1) % n).collect())?;
                let s = perm((0..n).map(|i| (i * m) % n).collect())?;
                PermGroup::generate(n, vec![r, s], caps)
            }
            Preset::Symmetric(n) => {
                caps.check_degree(n)?;
                let c = perm((0..n).map(|i| (i + 1) % n).collect())?;
                let mut gens = vec![c];
                if n > 2 {
                    gens.push(Permutation::from_cycles(n, "(0 1)")?);
                }
                PermGroup::generate(n, gens, caps)
            }
        }
    }

    pub fn instance(self, caps: &Caps) -> Result<Instance> {
        Instance::from_group(self.name(), self.group(caps)?)
    }
}

/// The action of `group` on the cosets of the stabilizer of `point`, i.e.
/// on the orbit of `point`.
pub fn stabilizer_action(group: &PermGroup, point: usize, caps: &Caps) -> Result<PermGroup> {
    let stab = point_stabilizer(group, point)?;
    Ok(coset_action(group, stab.generators(), caps)?.into_image())
}

/// Where an instance comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Preset(Preset),
    GroupFile(PathBuf),
    SchemeFile(PathBuf),
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load_group_file(
    path: &Path,
    stabilizer_point: Option<usize>,
    caps: &Caps,
) -> Result<Instance> {
    let spec = GroupSpec::from_json(&std::fs::read_to_string(path)?)?;
    let name = spec.name.clone().unwrap_or_else(|| file_stem(path));
    let mut group = spec.acting_group(caps)?;
    if let Some(k) = stabilizer_point {
        group = stabilizer_action(&group, k, caps)?;
    }
    Instance::from_group(name, group)
}

pub fn load_scheme_file(path: &Path, caps: &Caps) -> Result<Instance> {
    let spec = SchemeSpec::from_json(&std::fs::read_to_string(path)?)?;
    let name = spec.name.clone().unwrap_or_else(|| file_stem(path));
    caps.check_degree(spec.n)?;
    let scheme = spec.to_scheme()?;
    let group = match &spec.group {
        Some(g) => Some(g.acting_group(caps)?),
        None => None,
    };
    Ok(Instance {
        name,
        scheme,
        group,
    })
}

impl Source {
    pub fn load(&self, stabilizer_point: Option<usize>, caps: &Caps) -> Result<Instance> {
        match self {
            Source::Preset(p) => match stabilizer_point {
                None => p.instance(caps),
                Some(k) => {
                    Instance::from_group(p.name(), stabilizer_action(&p.group(caps)?, k, caps)?)
                }
            },
            Source::GroupFile(path) => load_group_file(path, stabilizer_point, caps),
            Source::SchemeFile(path) => load_scheme_file(path, caps),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Source::Preset(p) => p.name(),
            Source::GroupFile(p) | Source::SchemeFile(p) => file_stem(p),
        }
    }
}

/// One line of a catalog file. Exactly one of `preset`, `group`, `scheme`
/// or `family` is set; `family` takes an inclusive `range`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<(usize, usize)>,
}

impl CatalogEntry {
    /// Expands the entry; relative paths are taken from `base`.
    pub fn sources(&self, base: &Path) -> Result<Vec<Source>> {
        let set = [
            self.preset.is_some(),
            self.group.is_some(),
            self.scheme.is_some(),
            self.family.is_some(),
        ];
        if set.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::Parse(
                "catalog entry needs exactly one of preset, group, scheme, family".into(),
            ));
        }
        if self.range.is_some() && self.family.is_none() {
            return Err(Error::Parse("range is only valid with family".into()));
        }
        if let Some(p) = &self.preset {
            return Ok(vec![Source::Preset(Preset::parse(p)?)]);
        }
        if let Some(p) = &self.group {
            return Ok(vec![Source::GroupFile(base.join(p))]);
        }
        if let Some(p) = &self.scheme {
            return Ok(vec![Source::SchemeFile(base.join(p))]);
        }
        let family = self.family.as_deref().unwrap_or_default();
        let (lo, hi) = self
            .range
            .ok_or_else(|| Error::Parse(format!("family {family:?} needs a range")))?;
        (lo..=hi)
            .map(|n| Preset::parse(&format!("{family}-{n}")).map(Source::Preset))
            .collect()
    }
}

/// Reads a catalog: a JSON array of [`CatalogEntry`].
pub fn load_catalog(path: &Path) -> Result<Vec<Source>> {
    let entries: Vec<CatalogEntry> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let mut out = Vec::new();
    for e in &entries {
        out.extend(e.sources(base)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ClassificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub rows: Vec<ScanRow>,
    pub triply_transitive: usize,
    pub triply_regular: usize,
    pub inconsistent: usize,
    pub errors: usize,
}

/// Orders names so that `dihedral-9` precedes `dihedral-10`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => p.len().cmp(&q.len()).then_with(|| p.cmp(q)),
            ((_, p), (_, q)) => p.cmp(q),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len())
}

fn scan_one(source: &Source, caps: &Caps, opts: ClassifyOptions) -> ScanRow {
    let name = source.label();
    match source
        .load(None, caps)
        .and_then(|inst| classify_with(&inst, opts))
    {
        Ok(report) => ScanRow {
            name: report.name.clone(),
            report: Some(report),
            error: None,
        },
        Err(e) => ScanRow {
            name,
            report: None,
            error: Some(e.to_string()),
        },
    }
}

/// Classifies every source; `parallel > 1` uses that many worker threads.
/// Rows come back sorted by name whatever the parallelism.
pub fn scan(
    sources: &[Source],
    caps: &Caps,
    opts: ClassifyOptions,
    parallel: usize,
) -> Result<ScanSummary> {
    let mut rows: Vec<ScanRow> = if parallel > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(parallel)
            .build()
            .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
        pool.install(|| {
            sources
                .par_iter()
                .map(|s| scan_one(s, caps, opts))
                .collect()
        })
    } else {
        sources.iter().map(|s| scan_one(s, caps, opts)).collect()
    };
    rows.sort_by(|a, b| natural_cmp(&a.name, &b.name));

    let reports = || rows.iter().filter_map(|r| r.report.as_ref());
    let triply_transitive = reports()
        .filter(|r| r.brute.all_equal == Some(true))
        .count();
    let triply_regular = reports().filter(|r| r.brute.t0_equals_t).count();
    let inconsistent = reports().filter(|r| !r.consistent).count();
    let errors = rows.iter().filter(|r| r.error.is_some()).count();
    Ok(ScanSummary {
        rows,
        triply_transitive,
        triply_regular,
        inconsistent,
        errors,
    })
}

/// An ingested copy of a group's orbital scheme, without the group.
pub fn ingested(instance: &Instance) -> Result<Scheme> {
    let s = &instance.scheme;
    Scheme::from_color_matrix(s.n(), s.color_matrix(), Origin::Ingested)
}
