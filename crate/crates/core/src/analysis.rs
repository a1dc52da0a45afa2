//! Everything the crate knows about one level of a sphere-product model.

use crate::desing::desing_poincare;
use crate::equiv::{kirwan_audit, KirwanReport};
use crate::error::Result;
use crate::exactalg::{PoincarePolynomial, Rational};
use crate::les::{les_assemble, link_cohomology, singular_betti_collapse, singular_links, BettiTable, LesReport, LinkData};
use crate::model::{CriticalLevel, FixedPointData, LevelKind, SphereProductModel};
use crate::wallcross::{reduced_poincare, ChamberQuery};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelVerdict {
    Regular,
    Singular,
    /// The level is the minimum or maximum of the image; the level set is
    /// the single extremal fixed point.
    Point,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub point: FixedPointData,
    pub link: LinkData,
    pub link_cohomology: PoincarePolynomial,
}

#[derive(Clone, Debug)]
pub struct LevelAnalysis {
    pub model: SphereProductModel,
    pub level: Rational,
    pub verdict: LevelVerdict,
    pub fixed_points: Vec<FixedPointData>,
    pub critical_values: Vec<CriticalLevel>,
    /// Betti numbers of the quotient at `level`.
    pub betti: PoincarePolynomial,
    pub desing: Option<PoincarePolynomial>,
    pub les: Option<LesReport>,
    pub collapse: Option<BettiTable>,
    pub singular_points: Vec<SingularPoint>,
    pub kirwan: Option<KirwanReport>,
    /// Degrees `k` with `b_k != b_(dim - k)`.
    pub duality_defect: Vec<usize>,
}

pub fn analyze(model: &SphereProductModel, level: &Rational) -> Result<LevelAnalysis> {
    let centered = model.recentered(level);
    let critical_values = model.critical_values();
    let (lo, hi) = model.momentum_range();
    let verdict = match model.is_regular(level) {
        LevelKind::OutsideImage => LevelVerdict::Empty,
        LevelKind::Critical if level == &lo || level == &hi => LevelVerdict::Point,
        LevelKind::Critical => LevelVerdict::Singular,
        LevelKind::Regular => LevelVerdict::Regular,
    };
    let mut out = LevelAnalysis {
        model: model.clone(),
        level: level.clone(),
        verdict,
        fixed_points: model.enumerate_fixed_points(),
        critical_values,
        betti: PoincarePolynomial::zero(),
        desing: None,
        les: None,
        collapse: None,
        singular_points: Vec::new(),
        kirwan: None,
        duality_defect: Vec::new(),
    };
    match verdict {
        LevelVerdict::Empty => {}
        LevelVerdict::Point => out.betti = PoincarePolynomial::one(),
        LevelVerdict::Regular => {
            let p = reduced_poincare(&ChamberQuery::new(&centered, Rational::from_integer(0.into())))?;
            out.kirwan = Some(kirwan_audit(&centered, &p)?);
            out.les = Some(les_assemble(&centered)?);
            out.desing = Some(p.clone());
            out.betti = p;
        }
        LevelVerdict::Singular => {
            let collapse = singular_betti_collapse(&centered)?;
            out.desing = Some(desing_poincare(&centered)?);
            out.les = Some(les_assemble(&centered)?);
            out.kirwan = Some(kirwan_audit(&centered, &collapse.dims)?);
            out.singular_points = singular_links(&centered)?
                .into_iter()
                .map(|(f, link)| {
                    let point = model
                        .fixed_point(match f.label() {
                            crate::model::FixedPointLabel::Poles(p) => p,
                            _ => unreachable!(),
                        });
                    SingularPoint {
                        point,
                        link,
                        link_cohomology: link_cohomology(&link),
                    }
                })
                .collect();
            out.betti = collapse.dims.clone();
            out.collapse = Some(collapse);
        }
    }
    if matches!(verdict, LevelVerdict::Regular | LevelVerdict::Singular) {
        let top = model.quotient_dimension();
        out.duality_defect = (0..=top)
            .filter(|&k| out.betti.coeff(k) != out.betti.coeff(top - k))
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn verdicts() {
        let m = SphereProductModel::diagonal(3, rat(0));
        assert_eq!(analyze(&m, &rat(0)).unwrap().verdict, LevelVerdict::Regular);
        assert_eq!(analyze(&m, &rat(1)).unwrap().verdict, LevelVerdict::Singular);
        let top = analyze(&m, &rat(3)).unwrap();
        assert_eq!(top.verdict, LevelVerdict::Point);
        assert_eq!(top.betti, PoincarePolynomial::one());
        let out = analyze(&m, &rat(4)).unwrap();
        assert_eq!(out.verdict, LevelVerdict::Empty);
        assert!(out.betti.is_zero());
    }

    #[test]
    fn four_sphere_singular_pipeline() {
        let a = analyze(&SphereProductModel::diagonal(4, rat(0)), &rat(0)).unwrap();
        assert_eq!(a.betti.dims_through(6), vec![1, 0, 1, 2, 5, 0, 1]);
        assert_eq!(a.singular_points.len(), 6);
        assert!(a.singular_points.iter().all(|s| s.link == LinkData { ell_plus: 2, ell_minus: 2 }));
        assert_eq!(a.duality_defect, vec![2, 4]);
        assert_eq!(a.kirwan.unwrap().odd_obstructions.len(), 1);
    }

    #[test]
    fn singular_points_carry_original_values() {
        let a = analyze(&SphereProductModel::diagonal(3, rat(0)), &rat(1)).unwrap();
        assert_eq!(a.singular_points.len(), 3);
        assert!(a.singular_points.iter().all(|s| s.point.value() == &rat(1)));
    }
}
