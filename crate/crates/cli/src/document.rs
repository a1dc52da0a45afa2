//! The machine-readable result document.
//!
//! Field order is the struct order and every rational is a canonical
//! `"p/q"` string, so parsing and re-serializing a document reproduces it
//! byte for byte.

use crate::spec::{InputEcho, LoadedSpec};
use crate::CliError;
use quotient_core::analysis::{LevelAnalysis, LevelVerdict};
use quotient_core::equiv::KirwanReport;
use quotient_core::exactalg::{format_rational, rat};
use quotient_core::les::{LesReport, LesStatus, SingularDim};
use quotient_core::{CriticalLevel, FixedPointData, PoincarePolynomial, SphereProductModel};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    /// Stated outright for a worked example in the literature.
    PaperAnchored,
    /// Computed here and cross-checked by a second route (see `oracle`).
    Derived,
    /// Pinned down by exactness of the sequence alone.
    Forced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tool {
    pub name: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointRow {
    pub label: String,
    pub value: String,
    pub weights: Vec<i64>,
    pub ell_plus: usize,
    pub ell_minus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalRow {
    pub value: String,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedNumber {
    pub degree: usize,
    pub value: u64,
    pub flag: Flag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LesRowDoc {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular_range: Option<[u64; 2]>,
    pub desing: u64,
    pub cokernel: u64,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    pub ell_plus: usize,
    pub ell_minus: usize,
    pub dimension: usize,
    pub betti: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenMarginDoc {
    pub degree: usize,
    pub equivariant: u64,
    pub singular: u64,
    pub margin: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddObstructionDoc {
    pub degree: usize,
    pub singular: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirwanDoc {
    pub even: Vec<EvenMarginDoc>,
    pub odd_obstructions: Vec<OddObstructionDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonDoc {
    pub verdict: String,
    pub betti: Vec<u64>,
    pub duality_defect: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub tool: Tool,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_points: Option<Vec<FixedPointRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub critical_values: Option<Vec<CriticalRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub desing: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular: Option<Vec<FlaggedNumber>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub les: Option<Vec<LesRowDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub links: Option<Vec<LinkDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kirwan: Option<KirwanDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polygon: Option<PolygonDoc>,
}

impl ResultDocument {
    pub fn new(command: &str, spec: Option<&LoadedSpec>) -> Self {
        Self {
            tool: Tool {
                name: "qcoh".into(),
                version: env!("CARGO_PKG_VERSION").into(),
            },
            command: command.into(),
            input: spec.map(|s| s.echo.clone()),
            level: spec.map(|s| s.echo.level.clone()),
            verdict: None,
            fixed_points: None,
            critical_values: None,
            reduced: None,
            desing: None,
            singular: None,
            les: None,
            links: None,
            kirwan: None,
            polygon: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("bad result document: {}", e)))
    }
}

pub fn dims(p: &PoincarePolynomial, top: usize) -> Vec<u64> {
    p.dims_through(top).into_iter().map(|d| d.max(0) as u64).collect()
}

pub fn fixed_point_rows(points: &[FixedPointData]) -> Vec<FixedPointRow> {
    points
        .iter()
        .map(|f| FixedPointRow {
            label: f.label().to_string(),
            value: format_rational(f.value()),
            weights: f.weights().to_vec(),
            ell_plus: f.ell_plus(),
            ell_minus: f.ell_minus(),
        })
        .collect()
}

pub fn critical_rows(levels: &[CriticalLevel]) -> Vec<CriticalRow> {
    levels
        .iter()
        .map(|l| CriticalRow {
            value: format_rational(&l.value),
            points: l.fixed_points.len(),
        })
        .collect()
}

pub fn verdict_name(v: LevelVerdict) -> &'static str {
    match v {
        LevelVerdict::Regular => "regular",
        LevelVerdict::Singular => "singular",
        LevelVerdict::Point => "point",
        LevelVerdict::Empty => "empty",
    }
}

pub fn status_name(s: LesStatus) -> &'static str {
    match s {
        LesStatus::Exact => "exact",
        LesStatus::SplitEven => "split-even",
        LesStatus::Underdetermined => "underdetermined",
    }
}

pub fn les_rows(report: &LesReport) -> Vec<LesRowDoc> {
    report
        .rows
        .iter()
        .map(|r| {
            let (singular, singular_range) = match (&r.singular, r.singular.value()) {
                (_, Some(v)) => (Some(v), None),
                (SingularDim::Interval { lo, hi }, None) => (None, Some([*lo, *hi])),
                (SingularDim::Solved { .. }, None) => unreachable!(),
            };
            LesRowDoc {
                degree: r.degree,
                singular,
                singular_range,
                desing: r.desing,
                cokernel: r.cokernel,
                status: status_name(r.status).into(),
            }
        })
        .collect()
}

pub fn kirwan_doc(k: &KirwanReport) -> KirwanDoc {
    KirwanDoc {
        even: k
            .even
            .iter()
            .map(|e| EvenMarginDoc {
                degree: e.degree,
                equivariant: e.equivariant,
                singular: e.singular,
                margin: e.margin,
            })
            .collect(),
        odd_obstructions: k
            .odd_obstructions
            .iter()
            .map(|o| OddObstructionDoc {
                degree: o.degree,
                singular: o.singular,
            })
            .collect(),
    }
}

/// Singular Betti numbers stated outright for worked examples: the two- and
/// three-sphere diagonal models at their singular level 0 (after recentering).
fn anchored(centered: &SphereProductModel) -> Option<Vec<u64>> {
    let known = [
        (SphereProductModel::diagonal(2, rat(0)), vec![1, 0, 1]),
        (SphereProductModel::diagonal(3, rat(1)), vec![1, 0, 1, 0, 1]),
    ];
    known.into_iter().find(|(m, _)| m == centered).map(|(_, b)| b)
}

const COLLAPSE_ORACLE: &str =
    "collapse route (restriction rank); inside the exact-sequence bounds and every segment balances";
const SPLIT_ORACLE: &str = "collapse route; equals the split short exact sequences";
const REGULAR_ORACLE: &str = "wall-crossing sum over fixed points below the level";

/// Flagged Betti numbers of the quotient at the analysed level.
pub fn flagged_singular(a: &LevelAnalysis) -> Result<Vec<FlaggedNumber>, CliError> {
    let top = a.model.quotient_dimension();
    let values = dims(&a.betti, top);
    let forced = |degree, value| FlaggedNumber {
        degree,
        value,
        flag: Flag::Forced,
        oracle: None,
    };
    let derived = |degree, value, oracle: &str| FlaggedNumber {
        degree,
        value,
        flag: Flag::Derived,
        oracle: Some(oracle.into()),
    };
    match a.verdict {
        LevelVerdict::Point | LevelVerdict::Empty => {
            Ok(values.iter().enumerate().map(|(d, &v)| forced(d, v)).collect())
        }
        LevelVerdict::Regular => Ok(values
            .iter()
            .enumerate()
            .map(|(d, &v)| derived(d, v, REGULAR_ORACLE))
            .collect()),
        LevelVerdict::Singular => {
            let les = a.les.as_ref().expect("singular analysis carries the sequence");
            let anchor = anchored(&a.model.recentered(&a.level));
            if let Some(expected) = &anchor {
                if expected != &values {
                    return Err(CliError::Core(quotient_core::Error::Inconsistent(format!(
                        "computed Betti numbers {:?} contradict the worked example {:?}",
                        values, expected
                    ))));
                }
            }
            Ok(les
                .rows
                .iter()
                .map(|r| {
                    let v = values[r.degree];
                    if anchor.is_some() {
                        FlaggedNumber {
                            degree: r.degree,
                            value: v,
                            flag: Flag::PaperAnchored,
                            oracle: None,
                        }
                    } else {
                        match r.status {
                            LesStatus::Exact => forced(r.degree, v),
                            LesStatus::SplitEven => derived(r.degree, v, SPLIT_ORACLE),
                            LesStatus::Underdetermined => derived(r.degree, v, COLLAPSE_ORACLE),
                        }
                    }
                })
                .collect())
        }
    }
}
