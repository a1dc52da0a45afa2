mod common;

use common::{random_model, random_singular_model};
use proptest::prelude::*;
use quotient_core::desing::{desing_poincare, desing_poincare_from_above};
use quotient_core::exactalg::{rat, ratio};
use quotient_core::les::{les_assemble, singular_betti_collapse, LesStatus};
use quotient_core::wallcross::{chamber_representatives, reduced_poincare, ChamberQuery};
use quotient_core::{PoincarePolynomial, Rational, SphereProductModel};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// `H(M_c)` from the stratification of `(J - c)^2`, which is equivariantly
/// perfect: `(1+t^2)^n = P(M_c)(1 - t^2) + Σ_{J(F)<c} t^(2ℓ⁺) + Σ_{J(F)>c} t^(2ℓ⁻)`.
fn stratification_oracle(m: &SphereProductModel, c: &Rational) -> PoincarePolynomial {
    let mut rhs = m.manifold_poincare();
    for f in m.enumerate_fixed_points() {
        let idx = if f.value() < c { f.ell_plus() } else { f.ell_minus() };
        rhs -= &PoincarePolynomial::monomial(2 * idx, 1);
    }
    // Divide by 1 - t^2.
    let top = rhs.degree().unwrap_or(0);
    let mut q = vec![0i64; top + 1];
    for k in 0..=top {
        q[k] = rhs.coeff(k) + if k >= 2 { q[k - 2] } else { 0 };
    }
    let q = PoincarePolynomial::from_coeffs(q);
    assert_eq!(&q * &PoincarePolynomial::from_coeffs(vec![1, 0, -1]), rhs, "division left a remainder");
    q
}

#[test]
fn wall_crossing_matches_stratification() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..60 {
        let m = random_model(&mut rng, 6);
        for c in chamber_representatives(&m.critical_values()) {
            let (lo, hi) = m.momentum_range();
            if c < lo || c > hi {
                continue;
            }
            let wc = reduced_poincare(&ChamberQuery::new(&m, c.clone())).unwrap();
            assert_eq!(wc, stratification_oracle(&m, &c), "{:?} at {}", m, c);
        }
    }
}

#[test]
fn routes_agree_on_random_singular_levels() {
    let mut rng = StdRng::seed_from_u64(12);
    let mut seen = 0;
    while seen < 60 {
        let Some(m) = random_singular_model(&mut rng, 5) else { continue };
        seen += 1;
        let collapse = singular_betti_collapse(&m).unwrap().dims;
        let les = les_assemble(&m).unwrap();
        assert_eq!(les.singular_poincare().unwrap(), collapse, "{:?}", m);
        assert!(les.euler_consistent);
        assert_eq!(collapse.coeff(0), 1);
        if les.splitting_hypothesis_holds {
            assert!(les.rows.iter().all(|r| r.status != LesStatus::Underdetermined));
        }
        assert_eq!(desing_poincare(&m).unwrap(), desing_poincare_from_above(&m).unwrap());
    }
}

#[test]
fn five_spheres_at_one() {
    // Ten points with two-dimensional negative and four-dimensional positive
    // part; an analogue of the four-sphere collapse one dimension up.
    let m = SphereProductModel::diagonal(5, rat(-1));
    let dims = singular_betti_collapse(&m).unwrap().dims;
    let les = les_assemble(&m).unwrap();
    assert_eq!(les.singular_poincare().unwrap(), dims);
    assert_eq!(dims.coeff(0), 1);
    assert_eq!(dims.coeff(1), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reflection_mirrors_chambers(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_model(&mut rng, 5);
        let r = m.with_negated_speeds();
        for c in chamber_representatives(&m.critical_values()) {
            let a = reduced_poincare(&ChamberQuery::new(&m, c.clone())).unwrap();
            let b = reduced_poincare(&ChamberQuery::new(&r, -c)).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn chambers_are_constant(seed in any::<u64>(), num in 1i64..100) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_model(&mut rng, 5);
        let levels = m.critical_values();
        for w in levels.windows(2) {
            let t = ratio(num, 100);
            let inner = &w[0].value + (&w[1].value - &w[0].value) * t;
            let mid = (&w[0].value + &w[1].value) / rat(2);
            prop_assert_eq!(
                reduced_poincare(&ChamberQuery::new(&m, inner)).unwrap(),
                reduced_poincare(&ChamberQuery::new(&m, mid)).unwrap()
            );
        }
    }

    #[test]
    fn recentering_is_a_translation(seed in any::<u64>(), p in -8i64..8, q in 1i64..4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_model(&mut rng, 5);
        let d = ratio(p, q);
        let shifted = m.recentered(&d);
        for c in chamber_representatives(&m.critical_values()) {
            prop_assert_eq!(
                reduced_poincare(&ChamberQuery::new(&m, c.clone())).unwrap(),
                reduced_poincare(&ChamberQuery::new(&shifted, c - &d)).unwrap()
            );
        }
    }
}
