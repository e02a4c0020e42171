use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::permcore::{point_stabilizer, PermGroup};
use crate::schemes::{Scheme, Thinness};

/// Outcome of comparing `dim T` with `(s+t)² + s²`, where `t` is the number
/// of points fixed by the involution `φ` generating `G_v` and `s = (n-t)/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WedderburnReport {
    Checked {
        s: usize,
        t: usize,
        predicted: usize,
        actual: usize,
        holds: bool,
    },
    NotApplicable {
        reason: String,
    },
}

impl WedderburnReport {
    pub fn holds(&self) -> Option<bool> {
        match self {
            WedderburnReport::Checked { holds, .. } => Some(*holds),
            WedderburnReport::NotApplicable { .. } => None,
        }
    }

    fn not_applicable(reason: &str) -> Self {
        WedderburnReport::NotApplicable {
            reason: reason.into(),
        }
    }
}

/// `dim_t` is the dimension of `T_v`; `triply_transitive` the brute verdict.
pub fn wedderburn_check(
    scheme: &Scheme,
    group: &PermGroup,
    v: usize,
    dim_t: usize,
    triply_transitive: bool,
) -> Result<WedderburnReport> {
    match scheme.thinness() {
        Thinness::Thin => return Ok(WedderburnReport::not_applicable("thin scheme")),
        Thinness::Neither => return Ok(WedderburnReport::not_applicable("not quasi-thin")),
        Thinness::QuasiThin => {}
    }
    if !triply_transitive {
        return Ok(WedderburnReport::not_applicable("not triply transitive"));
    }
    let stab = point_stabilizer(group, v)?;
    if stab.order() != 2 {
        return Ok(WedderburnReport::not_applicable(
            "stabilizer is not of order 2",
        ));
    }
    let phi = stab
        .elements()
        .iter()
        .find(|p| !p.is_identity())
        .expect("order 2");
    let n = scheme.n();
    let t = phi.fixed_points().len();
    let s = (n - t) / 2;
    let predicted = (s + t) * (s + t) + s * s;
    Ok(WedderburnReport::Checked {
        s,
        t,
        predicted,
        actual: dim_t,
        holds: predicted == dim_t,
    })
}
