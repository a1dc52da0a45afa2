#![allow(dead_code)]

use quotient_core::exactalg::{rat, ratio};
use quotient_core::{Rational, SphereProductModel};
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_speed(rng: &mut StdRng) -> i64 {
    let a = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        a
    } else {
        -a
    }
}

pub fn random_positive(rng: &mut StdRng) -> Rational {
    ratio(rng.gen_range(1..=7), rng.gen_range(1..=3))
}

/// A model with `2 ..= max_n` spheres. Half the time the radii are all 1, so
/// that many fixed points share a critical value.
pub fn random_model(rng: &mut StdRng, max_n: usize) -> SphereProductModel {
    let n = rng.gen_range(2..=max_n);
    let unit = rng.gen_bool(0.5);
    let radii = (0..n)
        .map(|_| if unit { rat(1) } else { random_positive(rng) })
        .collect();
    let speeds = (0..n).map(|_| random_speed(rng)).collect();
    let shift = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=2));
    SphereProductModel::new(radii, speeds, shift).unwrap()
}

/// A random model recentered at one of its interior critical values, or
/// `None` when it has none.
pub fn random_singular_model(rng: &mut StdRng, max_n: usize) -> Option<SphereProductModel> {
    let m = random_model(rng, max_n);
    let levels = m.critical_values();
    if levels.len() < 3 {
        return None;
    }
    let i = rng.gen_range(1..levels.len() - 1);
    Some(m.recentered(&levels[i].value))
}
