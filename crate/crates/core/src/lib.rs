//! Exact cohomology calculator for symplectic quotients of Hamiltonian circle
//! actions on products of 2-spheres and on weighted projective spaces.
//!
//! The crate works entirely over the rationals. Regular reduced spaces are
//! handled by wall-crossing, singular ones through the partial
//! desingularization, the long exact sequence that relates the two, and an
//! independent collapse route driven by equivariant restriction ranks.

pub mod analysis;
pub mod desing;
pub mod equiv;
pub mod error;
pub mod exactalg;
pub mod les;
pub mod model;
pub mod polygon;
pub mod wallcross;

pub use error::{Error, Result};
pub use exactalg::{
    gs, parse_rational, BivariateHomogeneousPoly, GradedQuotientRing, PoincarePolynomial,
    Rational, RationalMatrix,
};
pub use model::{
    CriticalLevel, FixedPointData, FixedPointLabel, LevelKind, Pole, SphereProductModel,
    WeightedProjectiveModel,
};
