//! Model specification files, TOML or JSON.

use crate::CliError;
use quotient_core::exactalg::{format_rational, rat};
use quotient_core::polygon::{apol_model, PolygonSpec};
use quotient_core::{parse_rational, Rational, SphereProductModel, WeightedProjectiveModel};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// A rational written either as an integer or as a `"p/q"` string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    fn parse(&self, field: &str) -> Result<Rational, CliError> {
        match self {
            RationalInput::Int(n) => Ok(rat(*n)),
            RationalInput::Text(s) => {
                parse_rational(s).map_err(|e| CliError::Invalid(format!("{}: {}", field, e)))
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: String,
    radii: Option<Vec<RationalInput>>,
    weights: Option<Vec<RationalInput>>,
    lengths: Option<Vec<RationalInput>>,
    speeds: Option<Vec<i64>>,
    shift: Option<RationalInput>,
    level: Option<RationalInput>,
}

/// The input as the tool understood it, with every rational in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radii: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub speeds: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<String>,
    pub level: String,
}

#[derive(Clone, Debug)]
pub enum Model {
    Spheres(SphereProductModel),
    Projective(WeightedProjectiveModel),
    Polygon(PolygonSpec, SphereProductModel),
}

#[derive(Clone, Debug)]
pub struct LoadedSpec {
    pub model: Model,
    pub level: Rational,
    pub echo: InputEcho,
}

impl LoadedSpec {
    /// The sphere product behind the spec, if there is one.
    pub fn spheres(&self) -> Option<&SphereProductModel> {
        match &self.model {
            Model::Spheres(m) | Model::Polygon(_, m) => Some(m),
            Model::Projective(_) => None,
        }
    }

    pub fn require_spheres(&self, command: &str) -> Result<&SphereProductModel, CliError> {
        self.spheres().ok_or_else(|| {
            CliError::Invalid(format!(
                "`{}` needs a sphere_product or apol model, not {}",
                command, self.echo.kind
            ))
        })
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_list(v: &[RationalInput], field: &str) -> Result<Vec<Rational>, CliError> {
    v.iter().map(|r| r.parse(field)).collect()
}

fn forbid(present: bool, field: &str, kind: &str) -> Result<(), CliError> {
    if present {
        Err(CliError::Invalid(format!("`{}` is not a field of a {} spec", field, kind)))
    } else {
        Ok(())
    }
}

fn required<T>(v: Option<T>, field: &str, kind: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Invalid(format!("a {} spec needs `{}`", kind, field)))
}

fn build(raw: RawSpec) -> Result<LoadedSpec, CliError> {
    let kind = raw.kind.as_str();
    match kind {
        "sphere_product" => {
            forbid(raw.weights.is_some(), "weights", kind)?;
            forbid(raw.lengths.is_some(), "lengths", kind)?;
            let radii = parse_list(&required(raw.radii, "radii", kind)?, "radii")?;
            let speeds = required(raw.speeds, "speeds", kind)?;
            let shift = match raw.shift {
                Some(s) => s.parse("shift")?,
                None => rat(0),
            };
            let level = match raw.level {
                Some(l) => l.parse("level")?,
                None => rat(0),
            };
            let model = SphereProductModel::new(radii.clone(), speeds.clone(), shift.clone())?;
            Ok(LoadedSpec {
                echo: InputEcho {
                    kind: kind.into(),
                    radii: Some(strings(&radii)),
                    weights: None,
                    lengths: None,
                    speeds: Some(speeds),
                    shift: Some(format_rational(&shift)),
                    level: format_rational(&level),
                },
                model: Model::Spheres(model),
                level,
            })
        }
        "weighted_projective" => {
            forbid(raw.radii.is_some(), "radii", kind)?;
            forbid(raw.lengths.is_some(), "lengths", kind)?;
            forbid(raw.speeds.is_some(), "speeds", kind)?;
            forbid(raw.shift.is_some(), "shift", kind)?;
            let weights = parse_list(&required(raw.weights, "weights", kind)?, "weights")?
                .into_iter()
                .map(|w| {
                    if w.is_integer() {
                        i64::try_from(w.to_integer()).map_err(|_| CliError::Invalid("weight out of range".into()))
                    } else {
                        Err(CliError::Invalid(format!("weight {} is not an integer", format_rational(&w))))
                    }
                })
                .collect::<Result<Vec<i64>, _>>()?;
            let level = match raw.level {
                Some(l) => l.parse("level")?,
                None => rat(0),
            };
            let model = WeightedProjectiveModel::new(weights.clone())?;
            Ok(LoadedSpec {
                echo: InputEcho {
                    kind: kind.into(),
                    radii: None,
                    weights: Some(weights),
                    lengths: None,
                    speeds: None,
                    shift: None,
                    level: format_rational(&level),
                },
                model: Model::Projective(model),
                level,
            })
        }
        "apol" => {
            forbid(raw.radii.is_some(), "radii", kind)?;
            forbid(raw.weights.is_some(), "weights", kind)?;
            forbid(raw.speeds.is_some(), "speeds", kind)?;
            forbid(raw.shift.is_some(), "shift", kind)?;
            // The level of a polygon space is its last side.
            forbid(raw.level.is_some(), "level", kind)?;
            let lengths = parse_list(&required(raw.lengths, "lengths", kind)?, "lengths")?;
            polygon(lengths)
        }
        other => Err(CliError::Invalid(format!(
            "unknown kind `{}` (expected sphere_product, weighted_projective or apol)",
            other
        ))),
    }
}

pub fn polygon(lengths: Vec<Rational>) -> Result<LoadedSpec, CliError> {
    let spec = PolygonSpec::new(lengths.clone())?;
    let (model, level) = apol_model(&spec);
    Ok(LoadedSpec {
        echo: InputEcho {
            kind: "apol".into(),
            radii: None,
            weights: None,
            lengths: Some(strings(&lengths)),
            speeds: None,
            shift: None,
            level: format_rational(&level),
        },
        model: Model::Polygon(spec, model),
        level,
    })
}

pub fn parse_spec(text: &str, json: bool) -> Result<LoadedSpec, CliError> {
    let raw: RawSpec = if json {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("bad JSON spec: {}", e)))?
    } else {
        toml::from_str(text).map_err(|e| CliError::Invalid(format!("bad TOML spec: {}", e)))?
    };
    build(raw)
}

pub fn load_spec(path: &Path) -> Result<LoadedSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {}", path.display(), e)))?;
    let json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
        || (path.extension().is_none() && text.trim_start().starts_with('{'));
    parse_spec(&text, json)
}
