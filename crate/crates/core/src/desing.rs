//! Partial desingularization of a singular level: blow up every fixed point
//! in the zero level, then reduce.
//!
//! Blowing up an isolated fixed point `F` with weights `λ` replaces it by the
//! exceptional `CP^(k-1)`, whose fixed components are the projectivized
//! eigenspaces. The component of weight `μ` sits at momentum
//! `J(F) + δμ` for an infinitesimal `δ > 0`; its tangent weights along the
//! exceptional divisor are `λ_j - μ` and its weight along the tautological
//! line is `μ`. Only the sign of `μ` matters for where it sits relative to 0.

use crate::error::{Error, Result};
use crate::exactalg::{gs, rat, BivariateHomogeneousPoly, GradedQuotientRing, PoincarePolynomial, Rational};
use crate::model::{FixedPointData, FixedPointLabel, LevelKind, SphereProductModel, WeightedProjectiveModel};
use crate::wallcross::{crossing_delta, level_above, level_below, projective_reduced_poincare, reduced_poincare, ChamberQuery};
use itertools::Itertools;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalComponent {
    pub parent: FixedPointData,
    pub mu: i64,
    pub multiplicity: usize,
    pub component_poincare: PoincarePolynomial,
    pub tangent_weights: Vec<i64>,
}

impl ExceptionalComponent {
    /// The component as a fixed component of the blown-up manifold.
    pub fn as_fixed_point(&self) -> FixedPointData {
        FixedPointData::new(
            FixedPointLabel::Weight(self.mu),
            self.parent.value().clone(),
            self.tangent_weights.clone(),
            self.component_poincare.clone(),
        )
    }
}

/// Graded dimensions of `H*(F̃) / H*(F)` for one singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelTerm {
    pub parent: FixedPointData,
    pub graded_dims: PoincarePolynomial,
}

fn require_blowable(f: &FixedPointData) -> Result<()> {
    if !f.is_two_sided() {
        return Err(Error::OneSidedWeights {
            weights: f.weights().to_vec(),
        });
    }
    if !f.is_isolated() {
        return Err(Error::NotIsolated {
            weights: f.weights().to_vec(),
        });
    }
    Ok(())
}

pub fn blowup_components(f: &FixedPointData) -> Result<Vec<ExceptionalComponent>> {
    require_blowable(f)?;
    let distinct: Vec<i64> = f.weights().iter().copied().sorted().dedup().collect();
    Ok(distinct
        .into_iter()
        .map(|mu| {
            let multiplicity = f.weights().iter().filter(|&&w| w == mu).count();
            let mut tangent_weights: Vec<i64> = f
                .weights()
                .iter()
                .filter(|&&w| w != mu)
                .map(|w| w - mu)
                .collect();
            tangent_weights.push(mu);
            ExceptionalComponent {
                parent: f.clone(),
                mu,
                multiplicity,
                component_poincare: gs(multiplicity),
                tangent_weights,
            }
        })
        .collect())
}

fn zero_level_points(m: &SphereProductModel) -> Vec<FixedPointData> {
    m.enumerate_fixed_points()
        .into_iter()
        .filter(|p| p.value().is_zero())
        .collect()
}

/// Sum of the crossing increments of exceptional components whose `μ`
/// satisfies `select`, over every fixed point in the zero level.
fn exceptional_increment(points: &[FixedPointData], select: impl Fn(i64) -> bool) -> Result<PoincarePolynomial> {
    let mut total = PoincarePolynomial::zero();
    for f in points {
        for c in blowup_components(f)? {
            if select(c.mu) {
                total += &crossing_delta(&c.as_fixed_point());
            }
        }
    }
    Ok(total)
}

/// Betti numbers of the partial desingularization of the level `J = 0`,
/// approached from the chamber below 0.
pub fn desing_poincare(m: &SphereProductModel) -> Result<PoincarePolynomial> {
    let zero = Rational::zero();
    if m.is_regular(&zero) != LevelKind::Critical {
        return reduced_poincare(&ChamberQuery::new(m, zero));
    }
    let levels = m.critical_values();
    let below = reduced_poincare(&ChamberQuery::new(m, level_below(&levels, &zero)))?;
    let p = &below + &exceptional_increment(&zero_level_points(m), |mu| mu < 0)?;
    checked(p)
}

/// Same space, approached from the chamber above 0 by undoing the crossings
/// of the exceptional components with `μ > 0`.
pub fn desing_poincare_from_above(m: &SphereProductModel) -> Result<PoincarePolynomial> {
    let zero = Rational::zero();
    if m.is_regular(&zero) != LevelKind::Critical {
        return reduced_poincare(&ChamberQuery::new(m, zero));
    }
    let levels = m.critical_values();
    let above = reduced_poincare(&ChamberQuery::new(m, level_above(&levels, &zero)))?;
    let p = &above - &exceptional_increment(&zero_level_points(m), |mu| mu > 0)?;
    checked(p)
}

fn checked(p: PoincarePolynomial) -> Result<PoincarePolynomial> {
    if p.is_nonnegative() {
        Ok(p)
    } else {
        Err(Error::Inconsistent(format!("desingularization has negative Betti numbers {}", p)))
    }
}

/// Poincaré polynomial of the exceptional fiber `CP^(k-1)_λ // S^1`.
pub fn fiber_poincare(f: &FixedPointData) -> Result<PoincarePolynomial> {
    if !f.is_two_sided() {
        return Err(Error::OneSidedWeights {
            weights: f.weights().to_vec(),
        });
    }
    let wp = WeightedProjectiveModel::new(f.weights().to_vec())?;
    projective_reduced_poincare(&wp, &rat(0))
}

/// `H*(F) ⊗ fiber`.
pub fn leray_hirsch(fiber: &PoincarePolynomial, base: &PoincarePolynomial) -> PoincarePolynomial {
    fiber * base
}

pub fn cokernel_term(f: &FixedPointData) -> Result<CokernelTerm> {
    require_blowable(f)?;
    let fiber = fiber_poincare(f)?;
    let base = f.component_poincare();
    // H*(F) sits in H*(F̃) as the degree-zero part of the fiber ring.
    let graded_dims = &leray_hirsch(&fiber, base) - base;
    Ok(CokernelTerm {
        parent: f.clone(),
        graded_dims,
    })
}

/// `((Ξ/2 + σ)^ℓ⁺, (Ξ/2 - σ)^ℓ⁻)`: the truncation relations of the two
/// projective factors of an equal-weight fiber, written in the symplectic
/// class `σ = (dΘ₊ - dΘ₋)/2` and curvature class `Ξ = dΘ₊ + dΘ₋`.
pub fn equal_weight_ideal(ell_plus: usize, ell_minus: usize) -> GradedQuotientRing {
    let half = Rational::new(1.into(), 2.into());
    let half_xi = BivariateHomogeneousPoly::xi().scale(&half);
    let sigma = BivariateHomogeneousPoly::sigma();
    let plus = &half_xi + &sigma;
    let minus = &half_xi - &sigma;
    GradedQuotientRing::new(vec![plus.pow(ell_plus as u32), minus.pow(ell_minus as u32)])
}

/// The fiber ring presentation, available only when all weights share one
/// absolute value.
pub fn fiber_ideal(f: &FixedPointData) -> Result<GradedQuotientRing> {
    let first = f.weights().first().map(|w| w.abs());
    if first.is_none() || f.weights().iter().any(|w| Some(w.abs()) != first) {
        return Err(Error::UnequalWeights {
            weights: f.weights().to_vec(),
        });
    }
    if !f.is_two_sided() {
        return Err(Error::OneSidedWeights {
            weights: f.weights().to_vec(),
        });
    }
    Ok(equal_weight_ideal(f.ell_plus(), f.ell_minus()))
}

/// Top degree of the fiber, `2(ℓ⁺ + ℓ⁻) - 4`.
pub fn fiber_dimension(f: &FixedPointData) -> usize {
    2 * (f.ell_plus() + f.ell_minus()) - 4
}


#[cfg(test)]
mod tests {
    use super::*;

    fn point(weights: Vec<i64>) -> FixedPointData {
        FixedPointData::new(FixedPointLabel::Weight(0), rat(0), weights, PoincarePolynomial::one())
    }

    fn summary(cs: &[ExceptionalComponent]) -> Vec<(i64, PoincarePolynomial, Vec<i64>)> {
        cs.iter()
            .map(|c| {
                let mut t = c.tangent_weights.clone();
                t.sort();
                (c.mu, c.component_poincare.clone(), t)
            })
            .collect()
    }

    #[test]
    fn blowup_of_mixed_weights() {
        let cs = blowup_components(&point(vec![-1, 1, 1])).unwrap();
        assert_eq!(
            summary(&cs),
            vec![
                (-1, PoincarePolynomial::one(), vec![-1, 2, 2]),
                (1, gs(2), vec![-2, 1]),
            ]
        );
        for c in &cs {
            assert_eq!(c.tangent_weights.len(), 3 - c.multiplicity + 1);
        }
    }

    #[test]
    fn blowup_of_balanced_weights() {
        let cs = blowup_components(&point(vec![-1, -1, 1, 1])).unwrap();
        assert_eq!(
            summary(&cs),
            vec![(-1, gs(2), vec![-1, 2, 2]), (1, gs(2), vec![-2, -2, 1])]
        );
        let two = blowup_components(&point(vec![-1, 1])).unwrap();
        assert!(two.iter().all(|c| c.component_poincare == PoincarePolynomial::one()));
        assert_eq!(two.len(), 2);
    }

    #[test]
    fn blowup_rejects_one_sided() {
        assert!(matches!(
            blowup_components(&point(vec![1, 2])),
            Err(Error::OneSidedWeights { .. })
        ));
    }

    #[test]
    fn desing_of_examples() {
        assert_eq!(desing_poincare(&SphereProductModel::diagonal(3, rat(1))).unwrap(), PoincarePolynomial::from_even(&[1, 4, 1]));
        assert_eq!(desing_poincare(&SphereProductModel::diagonal(2, rat(0))).unwrap(), gs(2));
        assert_eq!(
            desing_poincare(&SphereProductModel::diagonal(4, rat(0))).unwrap(),
            PoincarePolynomial::from_even(&[1, 11, 11, 1])
        );
    }

    #[test]
    fn desing_at_regular_level_is_reduced_space() {
        let m = SphereProductModel::diagonal(3, rat(0));
        assert_eq!(desing_poincare(&m).unwrap(), PoincarePolynomial::from_even(&[1, 4, 1]));
    }

    #[test]
    fn desing_at_extremal_level_fails() {
        let m = SphereProductModel::diagonal(2, rat(2));
        assert!(matches!(desing_poincare(&m), Err(Error::OneSidedWeights { .. })));
    }

    #[test]
    fn fibers() {
        assert_eq!(fiber_poincare(&point(vec![1, 1, -1, -1])).unwrap(), PoincarePolynomial::from_even(&[1, 2, 1]));
        assert_eq!(fiber_poincare(&point(vec![1, -1])).unwrap(), PoincarePolynomial::one());
        assert_eq!(fiber_poincare(&point(vec![-1, 1, 1])).unwrap(), gs(2));
    }

    #[test]
    fn cokernels() {
        assert_eq!(cokernel_term(&point(vec![1, 1, -1, -1])).unwrap().graded_dims, PoincarePolynomial::from_even(&[0, 2, 1]));
        assert!(cokernel_term(&point(vec![1, -1])).unwrap().graded_dims.is_zero());
        assert_eq!(cokernel_term(&point(vec![-1, 1, 1])).unwrap().graded_dims, PoincarePolynomial::from_even(&[0, 1]));
    }

    #[test]
    fn equal_weight_ideals() {
        assert_eq!(equal_weight_ideal(2, 2).hilbert_dims(8), PoincarePolynomial::from_even(&[1, 2, 1]));
        assert_eq!(equal_weight_ideal(1, 1).hilbert_dims(8), PoincarePolynomial::one());
        assert_eq!(equal_weight_ideal(3, 1).hilbert_dims(8), gs(3));
        assert_eq!(
            fiber_ideal(&point(vec![2, 2, -2])).unwrap().hilbert_dims(8),
            gs(2)
        );
        assert!(matches!(fiber_ideal(&point(vec![1, -2])), Err(Error::UnequalWeights { .. })));
    }

    #[test]
    fn leray_hirsch_products() {
        assert_eq!(leray_hirsch(&gs(2), &PoincarePolynomial::one()), gs(2));
        assert_eq!(leray_hirsch(&PoincarePolynomial::from_even(&[1, 2, 1]), &gs(2)), PoincarePolynomial::from_even(&[1, 3, 3, 1]));
        let p = PoincarePolynomial::from_coeffs(vec![1, 0, 3, 1]);
        assert_eq!(leray_hirsch(&PoincarePolynomial::one(), &p), p);
    }

    #[test]
    fn fiber_routes_agree() {
        for lp in 1..=5usize {
            for lm in 1..=5usize {
                let mut w = vec![1i64; lp];
                w.extend(std::iter::repeat_n(-1, lm));
                let f = point(w);
                let by_wall = fiber_poincare(&f).unwrap();
                let top = fiber_dimension(&f);
                assert_eq!(by_wall, fiber_ideal(&f).unwrap().hilbert_dims(top + 2));
                assert_eq!(by_wall, &gs(lp) * &gs(lm));
                assert!(by_wall.is_palindromic(top));
            }
        }
    }
}
