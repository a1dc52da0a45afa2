use super::{PoincarePolynomial, Rational, RationalMatrix};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Homogeneous polynomial in two degree-2 generators `σ` and `Ξ`.
///
/// The key `(i, j)` stands for `σ^i Ξ^j`, of cohomological degree `2(i+j)`.
/// All stored terms share one total degree; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariateHomogeneousPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariateHomogeneousPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(sigma_exp: u32, xi_exp: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((sigma_exp, xi_exp), c);
        }
        Self { terms }
    }

    pub fn sigma() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn xi() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `i + j` of every term; `None` for the zero polynomial.
    pub fn half_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|(i, j)| i + j)
    }

    /// Cohomological degree `2(i+j)`.
    pub fn degree(&self) -> Option<u32> {
        self.half_degree().map(|d| 2 * d)
    }

    pub fn coeff(&self, sigma_exp: u32, xi_exp: u32) -> Rational {
        self.terms
            .get(&(sigma_exp, xi_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }

    /// Zero if the cohomological degree exceeds `max_degree`, else unchanged.
    pub fn truncate(&self, max_degree: u32) -> Self {
        match self.degree() {
            Some(d) if d > max_degree => Self::zero(),
            _ => self.clone(),
        }
    }

    /// Sum, or `None` when both operands are nonzero of different degrees.
    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        match (self.half_degree(), rhs.half_degree()) {
            (Some(a), Some(b)) if a != b => return None,
            _ => {}
        }
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            let e = terms.entry(*k).or_insert_with(Rational::zero);
            *e += v;
            if e.is_zero() {
                terms.remove(k);
            }
        }
        Some(Self { terms })
    }
}

impl Add for &BivariateHomogeneousPoly {
    type Output = BivariateHomogeneousPoly;

    /// # Panics
    /// If the operands are nonzero of different degrees.
    fn add(self, rhs: &BivariateHomogeneousPoly) -> BivariateHomogeneousPoly {
        self.checked_add(rhs)
            .expect("adding homogeneous polynomials of different degrees")
    }
}

impl Neg for &BivariateHomogeneousPoly {
    type Output = BivariateHomogeneousPoly;

    fn neg(self) -> BivariateHomogeneousPoly {
        self.scale(&-Rational::one())
    }
}

impl Sub for &BivariateHomogeneousPoly {
    type Output = BivariateHomogeneousPoly;

    fn sub(self, rhs: &BivariateHomogeneousPoly) -> BivariateHomogeneousPoly {
        self + &(-rhs)
    }
}

impl Mul for &BivariateHomogeneousPoly {
    type Output = BivariateHomogeneousPoly;

    fn mul(self, rhs: &BivariateHomogeneousPoly) -> BivariateHomogeneousPoly {
        let mut terms: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &rhs.terms {
                *terms.entry((i + k, j + l)).or_insert_with(Rational::zero) += a * b;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        BivariateHomogeneousPoly { terms }
    }
}

/// `Q[σ, Ξ] / I` for a homogeneous ideal `I` given by generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedQuotientRing {
    ideal_generators: Vec<BivariateHomogeneousPoly>,
}

impl GradedQuotientRing {
    pub fn new(ideal_generators: Vec<BivariateHomogeneousPoly>) -> Self {
        Self { ideal_generators }
    }

    pub fn ideal_generators(&self) -> &[BivariateHomogeneousPoly] {
        &self.ideal_generators
    }

    /// The same ring with one more ideal generator.
    pub fn with_generator(&self, g: BivariateHomogeneousPoly) -> Self {
        let mut gens = self.ideal_generators.clone();
        gens.push(g);
        Self::new(gens)
    }

    /// Graded dimensions through cohomological degree `max_degree`.
    ///
    /// The degree-`2d` slice of the ideal is spanned by `m * g` over generators
    /// `g` of half-degree `e <= d` and monomials `m` of half-degree `d - e`; its
    /// rank in the basis `σ^i Ξ^(d-i)` is subtracted from `d + 1`.
    pub fn hilbert_dims(&self, max_degree: usize) -> PoincarePolynomial {
        let mut dims = vec![0i64; max_degree + 1];
        for d in 0..=max_degree / 2 {
            dims[2 * d] = (d + 1) as i64 - self.slice_rank(d as u32) as i64;
        }
        PoincarePolynomial::from_coeffs(dims)
    }

    fn slice_rank(&self, d: u32) -> usize {
        let cols = d as usize + 1;
        let mut rows = Vec::new();
        for g in &self.ideal_generators {
            let Some(e) = g.half_degree() else { continue };
            if e > d {
                continue;
            }
            for a in 0..=(d - e) {
                let m = BivariateHomogeneousPoly::monomial(a, d - e - a, Rational::one());
                let prod = &m * g;
                rows.push((0..=d).map(|i| prod.coeff(i, d - i)).collect::<Vec<_>>());
            }
        }
        RationalMatrix::from_rows(cols, rows).rank()
    }
}
