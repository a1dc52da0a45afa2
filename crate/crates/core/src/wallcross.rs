//! Betti numbers of regular reduced spaces by accumulating wall-crossing
//! increments from the bottom of the momentum image.
//!
//! Crossing a fixed component `F` upwards removes a neighbourhood of the
//! projectivized negative normal space (codimension `ℓ⁺`) and glues in the
//! projectivized positive one (codimension `ℓ⁻`), which changes the Poincaré
//! polynomial by `P(F) · (t^(2ℓ⁻) - t^(2ℓ⁺)) / (1 - t^2)`.

use crate::error::{Error, Result};
use crate::exactalg::{gs, rat, PoincarePolynomial, Rational};
use crate::model::{CriticalLevel, FixedPointData, LevelKind, SphereProductModel, WeightedProjectiveModel};

/// `(t^(2ℓ⁻) - t^(2ℓ⁺)) / (1 - t^2)` as a signed polynomial.
pub fn jump(ell_plus: usize, ell_minus: usize) -> PoincarePolynomial {
    use std::cmp::Ordering::*;
    match ell_minus.cmp(&ell_plus) {
        Less => gs(ell_plus - ell_minus).shift(2 * ell_minus),
        Greater => -gs(ell_minus - ell_plus).shift(2 * ell_plus),
        Equal => PoincarePolynomial::zero(),
    }
}

/// Signed change of the reduced Poincaré polynomial when the level passes
/// the value of `f` from below.
pub fn crossing_delta(f: &FixedPointData) -> PoincarePolynomial {
    f.component_poincare() * &jump(f.ell_plus(), f.ell_minus())
}

/// Sum of the increments of every component strictly below `level`.
pub fn accumulate<'a, I>(components: I, level: &Rational) -> PoincarePolynomial
where
    I: IntoIterator<Item = &'a FixedPointData>,
{
    components
        .into_iter()
        .filter(|f| f.value() < level)
        .map(crossing_delta)
        .sum()
}

/// A level on a sphere-product model.
#[derive(Clone, Debug)]
pub struct ChamberQuery<'a> {
    pub model: &'a SphereProductModel,
    pub level: Rational,
}

impl<'a> ChamberQuery<'a> {
    pub fn new(model: &'a SphereProductModel, level: Rational) -> Self {
        Self { model, level }
    }
}

pub fn reduced_poincare(q: &ChamberQuery<'_>) -> Result<PoincarePolynomial> {
    let points = q.model.enumerate_fixed_points();
    if points.iter().any(|f| f.value() == &q.level) {
        return Err(Error::CriticalLevel {
            level: q.level.clone(),
        });
    }
    let p = accumulate(&points, &q.level);
    ensure_nonnegative(p, &q.level)
}

pub fn projective_reduced_poincare(
    m: &WeightedProjectiveModel,
    level: &Rational,
) -> Result<PoincarePolynomial> {
    if m.is_regular(level) == LevelKind::Critical {
        return Err(Error::CriticalLevel {
            level: level.clone(),
        });
    }
    let p = accumulate(&m.projective_fixed_components(), level);
    ensure_nonnegative(p, level)
}

fn ensure_nonnegative(p: PoincarePolynomial, level: &Rational) -> Result<PoincarePolynomial> {
    if p.is_nonnegative() {
        Ok(p)
    } else {
        Err(Error::Inconsistent(format!(
            "wall-crossing produced negative Betti numbers {} at level {}",
            p, level
        )))
    }
}

/// A regular level in the open chamber directly below the critical value `c`
/// (the midpoint to the previous critical value, or `c - 1` below the image).
pub fn level_below(levels: &[CriticalLevel], c: &Rational) -> Rational {
    match levels.iter().rev().find(|l| &l.value < c) {
        Some(l) => (&l.value + c) / rat(2),
        None => c - rat(1),
    }
}

/// Mirror of [`level_below`].
pub fn level_above(levels: &[CriticalLevel], c: &Rational) -> Rational {
    match levels.iter().find(|l| &l.value > c) {
        Some(l) => (&l.value + c) / rat(2),
        None => c + rat(1),
    }
}

/// One representative level per open chamber between consecutive critical
/// values, plus one level on either side of the image.
pub fn chamber_representatives(levels: &[CriticalLevel]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(levels.len() + 1);
    if let Some(first) = levels.first() {
        out.push(level_below(levels, &first.value));
    }
    for l in levels {
        out.push(level_above(levels, &l.value));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;
    use crate::model::FixedPointLabel;

    fn point(weights: Vec<i64>) -> FixedPointData {
        FixedPointData::new(FixedPointLabel::Weight(0), rat(0), weights, PoincarePolynomial::one())
    }

    #[test]
    fn deltas() {
        assert_eq!(crossing_delta(&point(vec![1, 1, 1, 1])), gs(4));
        assert_eq!(
            crossing_delta(&point(vec![-1, 1, 1, 1])),
            PoincarePolynomial::from_even(&[0, 1, 1])
        );
        assert!(crossing_delta(&point(vec![-1, -1, 1, 1])).is_zero());
        assert_eq!(crossing_delta(&point(vec![-1, -1, -1])), -gs(3));
    }

    #[test]
    fn four_sphere_chambers() {
        let m = SphereProductModel::diagonal(4, rat(0));
        let p = reduced_poincare(&ChamberQuery::new(&m, rat(-1))).unwrap();
        assert_eq!(p, PoincarePolynomial::from_even(&[1, 5, 5, 1]));
        assert_eq!(
            reduced_poincare(&ChamberQuery::new(&m, ratio(-7, 2))).unwrap(),
            gs(4)
        );
        assert!(reduced_poincare(&ChamberQuery::new(&m, rat(9))).unwrap().is_zero());
        assert!(reduced_poincare(&ChamberQuery::new(&m, rat(-9))).unwrap().is_zero());
    }

    #[test]
    fn three_sphere_chamber_below_zero_is_projective_plane() {
        let m = SphereProductModel::diagonal(3, rat(1));
        let p = reduced_poincare(&ChamberQuery::new(&m, rat(-1))).unwrap();
        assert_eq!(p, gs(3));
        // Above 0: the plane blown up in three points.
        let above = reduced_poincare(&ChamberQuery::new(&m, rat(1))).unwrap();
        assert_eq!(above, PoincarePolynomial::from_even(&[1, 4, 1]));
    }

    #[test]
    fn critical_level_is_rejected() {
        let m = SphereProductModel::diagonal(2, rat(0));
        let err = reduced_poincare(&ChamberQuery::new(&m, rat(0))).unwrap_err();
        assert_eq!(err, Error::CriticalLevel { level: rat(0) });
    }

    #[test]
    fn projective_examples() {
        let wp = |w: Vec<i64>| WeightedProjectiveModel::new(w).unwrap();
        assert_eq!(
            projective_reduced_poincare(&wp(vec![1, 1, -1, -1]), &rat(0)).unwrap(),
            PoincarePolynomial::from_even(&[1, 2, 1])
        );
        assert_eq!(
            projective_reduced_poincare(&wp(vec![1, -1]), &rat(0)).unwrap(),
            PoincarePolynomial::one()
        );
        assert_eq!(
            projective_reduced_poincare(&wp(vec![1, 2, -1]), &rat(0)).unwrap(),
            gs(2)
        );
        assert!(matches!(
            projective_reduced_poincare(&wp(vec![1, 2, -1]), &rat(1)),
            Err(Error::CriticalLevel { .. })
        ));
    }

    #[test]
    fn chamber_helpers() {
        let levels = SphereProductModel::diagonal(2, rat(0)).critical_values();
        assert_eq!(level_below(&levels, &rat(0)), rat(-1));
        assert_eq!(level_above(&levels, &rat(2)), rat(3));
        assert_eq!(chamber_representatives(&levels), [-3, -1, 1, 3].map(rat).to_vec());
    }
}
