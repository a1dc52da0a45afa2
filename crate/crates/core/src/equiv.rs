//! Equivariant cohomology of sphere products and restriction to fixed points.
//!
//! The circle action on `Π S^2` is equivariantly formal, so
//! `H_{S^1}(M) = Q[x] ⊗ H(M)`. A basis in degree `2k` is
//! `x^(k-|I|) Π_{i∈I} u_i` for subsets `I` with `|I| <= k`, where `u_i` is an
//! equivariant lift of the area class of the i-th sphere. The lift is fixed by
//! the gauge `u_i|N = a_i x`, `u_i|S = 0`; shifting `u_i` by `c_i x` only
//! changes the basis by a unitriangular transformation.
//!
//! Two facts link restriction ranks to the geometry of the singular quotient,
//! and both are assumptions of the collapse route in [`crate::les`]:
//! the Kirwan map onto the regular quotient just below the singular level is
//! surjective, and on the collapsed weighted projective space `CP^(ℓ⁻-1)` at a
//! fixed point `F`, the image of a class restricting to `c x^k` at `F` is `c`
//! times a nonzero multiple of the k-th power of the hyperplane class, which
//! is nonzero exactly when `k <= ℓ⁻ - 1`.

use crate::error::{Error, Result};
use crate::exactalg::{rat, PoincarePolynomial, Rational, RationalMatrix};
use crate::les::singular_betti_collapse;
use crate::model::{FixedPointData, LevelKind, Pole, SphereProductModel};
use crate::wallcross::{reduced_poincare, ChamberQuery};
use itertools::Itertools;
use num_traits::{One, Zero};

/// `dim H^j_{S^1}(M)` for `j = 0..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantDims {
    dims: Vec<u64>,
}

impl EquivariantDims {
    pub fn dim(&self, degree: usize) -> u64 {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }
}

/// `dim H^{2k}_{S^1}(M) = Σ_{j<=k} b_{2j}(M)`; odd degrees vanish.
pub fn equivariant_dims(m: &SphereProductModel, max_degree: usize) -> EquivariantDims {
    let betti = m.manifold_poincare();
    let mut running = 0i64;
    let dims = (0..=max_degree)
        .map(|d| {
            if d % 2 == 1 {
                return 0;
            }
            running += betti.coeff(d);
            running as u64
        })
        .collect();
    EquivariantDims { dims }
}

/// Coefficients of `x^k` in the restrictions of the degree-`2k` basis classes
/// to the zero-level fixed points with `ℓ⁻ >= k + 1`.
#[derive(Clone, Debug)]
pub struct RestrictionMatrix {
    pub degree: usize,
    pub rows: Vec<FixedPointData>,
    /// Subset `I` of each column; the power of `x` is `k - |I|`.
    pub columns: Vec<Vec<usize>>,
    pub matrix: RationalMatrix,
}

pub fn restriction_matrix(m: &SphereProductModel, k: usize) -> RestrictionMatrix {
    restriction_matrix_with_gauge(m, k, &vec![Rational::zero(); m.n()])
}

/// Restriction matrix for the lifts `u_i + c_i x`, with `gauge[i] = c_i`.
pub fn restriction_matrix_with_gauge(m: &SphereProductModel, k: usize, gauge: &[Rational]) -> RestrictionMatrix {
    assert_eq!(gauge.len(), m.n(), "one gauge shift per sphere");
    let rows: Vec<FixedPointData> = m
        .enumerate_fixed_points()
        .into_iter()
        .filter(|f| f.value().is_zero() && f.ell_minus() > k)
        .collect();
    let columns: Vec<Vec<usize>> = (0..=k.min(m.n()))
        .flat_map(|size| (0..m.n()).combinations(size))
        .collect();
    let entries = rows
        .iter()
        .map(|f| {
            let poles = match f.label() {
                crate::model::FixedPointLabel::Poles(p) => p,
                _ => unreachable!("sphere-product fixed points carry poles"),
            };
            columns
                .iter()
                .map(|subset| {
                    subset.iter().fold(Rational::one(), |acc, &i| {
                        let at_pole = if poles[i] == Pole::North {
                            rat(m.speeds()[i])
                        } else {
                            Rational::zero()
                        };
                        acc * (at_pole + &gauge[i])
                    })
                })
                .collect()
        })
        .collect();
    let matrix = RationalMatrix::from_rows(columns.len(), entries);
    RestrictionMatrix {
        degree: 2 * k,
        rows,
        columns,
        matrix,
    }
}

/// Rank of the degree-`2k` restriction matrix; 0 for an empty row set.
pub fn restriction_rank(m: &SphereProductModel, k: usize) -> usize {
    restriction_matrix(m, k).matrix.rank()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenMargin {
    pub degree: usize,
    pub equivariant: u64,
    pub singular: u64,
    pub margin: i64,
}

/// An odd degree where the quotient has cohomology but the equivariant
/// cohomology of the manifold has none, so no degree-preserving surjection
/// can exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddObstruction {
    pub degree: usize,
    pub singular: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirwanReport {
    pub even: Vec<EvenMargin>,
    pub odd_obstructions: Vec<OddObstruction>,
}

/// Compares `H_{S^1}(M)` with the given Betti numbers of the quotient at 0.
pub fn kirwan_audit(m: &SphereProductModel, quotient: &PoincarePolynomial) -> Result<KirwanReport> {
    let top = m.quotient_dimension();
    let eq = equivariant_dims(m, top + 1);
    let mut even = Vec::new();
    let mut odd_obstructions = Vec::new();
    for degree in 0..=top {
        let b = quotient.coeff(degree);
        if b < 0 {
            return Err(Error::Inconsistent(format!("negative Betti number in degree {}", degree)));
        }
        let b = b as u64;
        let e = eq.dim(degree);
        if degree % 2 == 0 {
            let margin = e as i64 - b as i64;
            if margin < 0 {
                return Err(Error::Inconsistent(format!(
                    "degree {}: dim H_S1 = {} < b = {}, no even surjection possible",
                    degree, e, b
                )));
            }
            even.push(EvenMargin {
                degree,
                equivariant: e,
                singular: b,
                margin,
            });
        } else if b > 0 && e == 0 {
            odd_obstructions.push(OddObstruction { degree, singular: b });
        }
    }
    Ok(KirwanReport {
        even,
        odd_obstructions,
    })
}

/// Kirwan dimension audit at level 0, regular or singular.
pub fn kirwan_report(m: &SphereProductModel) -> Result<KirwanReport> {
    let quotient = match m.is_regular(&Rational::zero()) {
        LevelKind::Critical => singular_betti_collapse(m)?.dims,
        _ => reduced_poincare(&ChamberQuery::new(m, Rational::zero()))?,
    };
    kirwan_audit(m, &quotient)
}
