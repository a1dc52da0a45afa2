//! The two supported Hamiltonian circle actions, their fixed points, weights
//! and critical values.
//!
//! Weight convention: near a fixed point `F` the momentum map reads
//! `J(F) + 1/2 Σ λ_j |z_j|^2`, so the number of positive (negative) weights is
//! the complex half-dimension of the positive (negative) Hessian eigenspace.
//! On the sphere product with `J = Σ a_i z_i + C`, the pole `s_i = ±1` of the
//! i-th sphere contributes the weight `-a_i s_i`.

use crate::error::{Error, Result};
use crate::exactalg::{format_rational, gs, rat, PoincarePolynomial, Rational};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pole {
    South,
    North,
}

impl Pole {
    pub fn sign(self) -> i64 {
        match self {
            Pole::South => -1,
            Pole::North => 1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pole::South => 'S',
            Pole::North => 'N',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FixedPointLabel {
    /// Pole combination on a sphere product.
    Poles(Vec<Pole>),
    /// Distinct weight value labelling an eigenspace component of a
    /// weighted projective space.
    Weight(i64),
}

impl fmt::Display for FixedPointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedPointLabel::Poles(p) => {
                for pole in p {
                    write!(f, "{}", pole.letter())?;
                }
                Ok(())
            }
            FixedPointLabel::Weight(mu) => write!(f, "mu={}", mu),
        }
    }
}

/// A connected fixed component with its local normal form data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    label: FixedPointLabel,
    value: Rational,
    weights: Vec<i64>,
    ell_plus: usize,
    ell_minus: usize,
    component_poincare: PoincarePolynomial,
}

impl FixedPointData {
    /// # Panics
    /// If a weight is zero.
    pub fn new(
        label: FixedPointLabel,
        value: Rational,
        weights: Vec<i64>,
        component_poincare: PoincarePolynomial,
    ) -> Self {
        assert!(weights.iter().all(|&w| w != 0), "zero weight at a fixed component");
        let ell_plus = weights.iter().filter(|&&w| w > 0).count();
        let ell_minus = weights.len() - ell_plus;
        Self {
            label,
            value,
            weights,
            ell_plus,
            ell_minus,
            component_poincare,
        }
    }

    pub fn label(&self) -> &FixedPointLabel {
        &self.label
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn ell_plus(&self) -> usize {
        self.ell_plus
    }

    pub fn ell_minus(&self) -> usize {
        self.ell_minus
    }

    pub fn component_poincare(&self) -> &PoincarePolynomial {
        &self.component_poincare
    }

    pub fn is_isolated(&self) -> bool {
        self.component_poincare == PoincarePolynomial::one()
    }

    pub fn is_two_sided(&self) -> bool {
        self.ell_plus >= 1 && self.ell_minus >= 1
    }
}

/// Fixed components sharing one momentum value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalLevel {
    pub value: Rational,
    pub fixed_points: Vec<FixedPointData>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelKind {
    Regular,
    Critical,
    OutsideImage,
}

fn group_levels(points: Vec<FixedPointData>) -> Vec<CriticalLevel> {
    let mut by_value: BTreeMap<Rational, Vec<FixedPointData>> = BTreeMap::new();
    for p in points {
        by_value.entry(p.value.clone()).or_default().push(p);
    }
    by_value
        .into_iter()
        .map(|(value, fixed_points)| CriticalLevel {
            value,
            fixed_points,
        })
        .collect()
}

fn classify(levels: &[CriticalLevel], c: &Rational) -> LevelKind {
    let (Some(lo), Some(hi)) = (levels.first(), levels.last()) else {
        return LevelKind::OutsideImage;
    };
    if c < &lo.value || c > &hi.value {
        LevelKind::OutsideImage
    } else if levels.iter().any(|l| &l.value == c) {
        LevelKind::Critical
    } else {
        LevelKind::Regular
    }
}

/// `Π S^2_{r_i}` with the circle rotating the i-th factor at speed `a_i`,
/// momentum map `J = Σ a_i z_i + C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereProductModel {
    radii: Vec<Rational>,
    speeds: Vec<i64>,
    shift: Rational,
}

impl SphereProductModel {
    pub fn new(radii: Vec<Rational>, speeds: Vec<i64>, shift: Rational) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::InvalidModel("at least one sphere is required".into()));
        }
        if radii.len() != speeds.len() {
            return Err(Error::InvalidModel(format!(
                "{} radii but {} speeds",
                radii.len(),
                speeds.len()
            )));
        }
        if let Some(r) = radii.iter().find(|r| !r.is_positive()) {
            return Err(Error::InvalidModel(format!(
                "radius {} is not positive",
                format_rational(r)
            )));
        }
        if let Some(i) = speeds.iter().position(|&a| a == 0) {
            return Err(Error::InvalidModel(format!(
                "speed of sphere {} is zero; its fixed set would not be isolated",
                i + 1
            )));
        }
        Ok(Self {
            radii,
            speeds,
            shift,
        })
    }

    /// `n` unit spheres at speed 1 with the given shift.
    pub fn diagonal(n: usize, shift: Rational) -> Self {
        Self::new(vec![Rational::one(); n], vec![1; n], shift)
            .expect("diagonal model is valid for n >= 1")
    }

    pub fn n(&self) -> usize {
        self.radii.len()
    }

    pub fn radii(&self) -> &[Rational] {
        &self.radii
    }

    pub fn speeds(&self) -> &[i64] {
        &self.speeds
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    /// Real dimension of regular reduced spaces, `2n - 2`.
    pub fn quotient_dimension(&self) -> usize {
        2 * self.n() - 2
    }

    /// The model whose momentum map is `J - level`, so `level` becomes 0.
    pub fn recentered(&self, level: &Rational) -> Self {
        Self {
            radii: self.radii.clone(),
            speeds: self.speeds.clone(),
            shift: &self.shift - level,
        }
    }

    pub fn with_negated_speeds(&self) -> Self {
        Self {
            radii: self.radii.clone(),
            speeds: self.speeds.iter().map(|a| -a).collect(),
            shift: -&self.shift,
        }
    }

    /// Poincaré polynomial of the sphere product itself, `(1 + t^2)^n`.
    pub fn manifold_poincare(&self) -> PoincarePolynomial {
        (0..self.n()).fold(PoincarePolynomial::one(), |acc, _| &acc * &gs(2))
    }

    pub fn fixed_point(&self, poles: &[Pole]) -> FixedPointData {
        assert_eq!(poles.len(), self.n());
        let value = poles
            .iter()
            .zip(&self.radii)
            .zip(&self.speeds)
            .fold(self.shift.clone(), |acc, ((p, r), a)| acc + r * rat(a * p.sign()));
        let weights = poles
            .iter()
            .zip(&self.speeds)
            .map(|(p, a)| -a * p.sign())
            .collect();
        FixedPointData::new(
            FixedPointLabel::Poles(poles.to_vec()),
            value,
            weights,
            PoincarePolynomial::one(),
        )
    }

    /// All `2^n` pole combinations, lexicographic with South before North.
    pub fn enumerate_fixed_points(&self) -> Vec<FixedPointData> {
        (0..self.n())
            .map(|_| [Pole::South, Pole::North])
            .multi_cartesian_product()
            .map(|poles| self.fixed_point(&poles))
            .collect()
    }

    pub fn critical_values(&self) -> Vec<CriticalLevel> {
        group_levels(self.enumerate_fixed_points())
    }

    /// `[min J, max J]`.
    pub fn momentum_range(&self) -> (Rational, Rational) {
        let spread: Rational = self
            .radii
            .iter()
            .zip(&self.speeds)
            .map(|(r, a)| r * rat(a.abs()))
            .fold(Rational::zero(), |acc, x| acc + x);
        (&self.shift - &spread, &self.shift + &spread)
    }

    pub fn is_regular(&self, c: &Rational) -> LevelKind {
        classify(&self.critical_values(), c)
    }
}

/// `CP^(k-1)` with `z·[l] = [z^λ_1 l_1 : ... : z^λ_k l_k]` and momentum map
/// `Σ λ_i |l_i|^2 / Σ |l_i|^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedProjectiveModel {
    weights: Vec<i64>,
}

impl WeightedProjectiveModel {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidModel("at least one weight is required".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidModel("weights must be nonzero".into()));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn quotient_dimension(&self) -> usize {
        2 * self.weights.len().saturating_sub(2)
    }

    /// One component per distinct weight `μ`, ascending: the projectivized
    /// `μ`-eigenspace, at momentum value `μ`, with tangent weights `λ_j - μ`.
    pub fn projective_fixed_components(&self) -> Vec<FixedPointData> {
        let distinct: Vec<i64> = self.weights.iter().copied().sorted().dedup().collect();
        distinct
            .into_iter()
            .map(|mu| {
                let mult = self.weights.iter().filter(|&&w| w == mu).count();
                let tangent = self
                    .weights
                    .iter()
                    .filter(|&&w| w != mu)
                    .map(|w| w - mu)
                    .collect();
                FixedPointData::new(FixedPointLabel::Weight(mu), rat(mu), tangent, gs(mult))
            })
            .collect()
    }

    pub fn critical_values(&self) -> Vec<CriticalLevel> {
        group_levels(self.projective_fixed_components())
    }

    pub fn is_regular(&self, c: &Rational) -> LevelKind {
        classify(&self.critical_values(), c)
    }
}
