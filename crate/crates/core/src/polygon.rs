//! Abelian polygon spaces `APol(r_1, ..., r_n)`: the circle quotient of
//! `Π_{i<n} S^2_{r_i}` (diagonal rotation) at the level `r_n`.

use crate::analysis::{analyze, LevelAnalysis, LevelVerdict};
use crate::error::{Error, Result};
use crate::exactalg::{format_rational, PoincarePolynomial, Rational};
use crate::model::SphereProductModel;
use num_traits::Signed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonSpec {
    lengths: Vec<Rational>,
}

impl PolygonSpec {
    pub fn new(lengths: Vec<Rational>) -> Result<Self> {
        if lengths.len() < 3 {
            return Err(Error::InvalidModel(format!(
                "a polygon needs at least 3 sides, got {}",
                lengths.len()
            )));
        }
        if let Some(r) = lengths.iter().find(|r| !r.is_positive()) {
            return Err(Error::InvalidModel(format!(
                "side length {} is not positive",
                format_rational(r)
            )));
        }
        Ok(Self { lengths })
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.lengths
    }
}

/// Sphere product of the first `n - 1` sides at unit speed, and the level `r_n`.
pub fn apol_model(p: &PolygonSpec) -> (SphereProductModel, Rational) {
    let (level, radii) = p.lengths.split_last().expect("validated length >= 3");
    let n = radii.len();
    let model = SphereProductModel::new(radii.to_vec(), vec![1; n], Rational::from_integer(0.into()))
        .expect("positive radii and unit speeds");
    (model, level.clone())
}

#[derive(Clone, Debug)]
pub struct PolygonReport {
    pub spec: PolygonSpec,
    pub verdict: LevelVerdict,
    pub betti: PoincarePolynomial,
    pub analysis: LevelAnalysis,
}

impl PolygonReport {
    /// Degrees where Poincaré duality fails; empty for regular spaces.
    pub fn duality_defect(&self) -> &[usize] {
        &self.analysis.duality_defect
    }
}

pub fn apol_report(p: &PolygonSpec) -> Result<PolygonReport> {
    let (model, level) = apol_model(p);
    let analysis = analyze(&model, &level)?;
    Ok(PolygonReport {
        spec: p.clone(),
        verdict: analysis.verdict,
        betti: analysis.betti.clone(),
        analysis,
    })
}
