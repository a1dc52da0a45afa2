use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Finitely supported series `degree -> dimension`.
///
/// Coefficients are signed so that wall-crossing increments can be carried
/// in the same type; a cohomology result is checked with
/// [`PoincarePolynomial::is_nonnegative`]. Trailing zeros are never stored,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PoincarePolynomial {
    coeffs: Vec<i64>,
}

/// `1 + t^2 + ... + t^(2m-2)`, the Poincaré polynomial of complex projective
/// `(m-1)`-space. `gs(0)` is zero.
pub fn gs(m: usize) -> PoincarePolynomial {
    let mut coeffs = vec![0; 2 * m];
    for k in 0..m {
        coeffs[2 * k] = 1;
    }
    PoincarePolynomial::from_coeffs(coeffs)
}

impl PoincarePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(degree: usize, coeff: i64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds a polynomial with `even[k]` in degree `2k` and zeros in odd degrees.
    pub fn from_even(even: &[i64]) -> Self {
        let mut coeffs = vec![0; 2 * even.len()];
        for (k, &c) in even.iter().enumerate() {
            coeffs[2 * k] = c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn set_coeff(&mut self, degree: usize, value: i64) {
        if degree >= self.coeffs.len() {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] = value;
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = Self::from_coeffs(trimmed);
    }

    /// Highest degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Dense coefficient vector for degrees `0..=top`, padded with zeros.
    pub fn dims_through(&self, top: usize) -> Vec<i64> {
        (0..=top).map(|k| self.coeff(k)).collect()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(d, c)| (d, *c))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Drops every degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_degree + 1).copied().collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn has_only_even_degrees(&self) -> bool {
        self.terms().all(|(d, _)| d % 2 == 0)
    }

    /// `b_k == b_(top-k)` for all k, and nothing above `top`.
    pub fn is_palindromic(&self, top: usize) -> bool {
        match self.degree() {
            None => true,
            Some(d) if d > top => false,
            Some(_) => (0..=top).all(|k| self.coeff(k) == self.coeff(top - k)),
        }
    }

    /// Value at `t = -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.terms()
            .map(|(d, c)| if d % 2 == 0 { c } else { -c })
            .sum()
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            match (d, abs) {
                (0, a) => write!(f, "{}", a)?,
                (1, 1) => write!(f, "t")?,
                (1, a) => write!(f, "{}t", a)?,
                (d, 1) => write!(f, "t^{}", d)?,
                (d, a) => write!(f, "{}t^{}", a, d)?,
            }
        }
        Ok(())
    }
}

impl Add for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn add(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PoincarePolynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn sub(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PoincarePolynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn mul(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return PoincarePolynomial::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                coeffs[i + j] += a * b;
            }
        }
        PoincarePolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn neg(self) -> PoincarePolynomial {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PoincarePolynomial {
            type Output = PoincarePolynomial;
            fn $m(self, rhs: PoincarePolynomial) -> PoincarePolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PoincarePolynomial> for PoincarePolynomial {
            type Output = PoincarePolynomial;
            fn $m(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PoincarePolynomial {
    type Output = PoincarePolynomial;
    fn neg(self) -> PoincarePolynomial {
        -&self
    }
}

impl AddAssign<&PoincarePolynomial> for PoincarePolynomial {
    fn add_assign(&mut self, rhs: &PoincarePolynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&PoincarePolynomial> for PoincarePolynomial {
    fn sub_assign(&mut self, rhs: &PoincarePolynomial) {
        *self = &*self - rhs;
    }
}

impl Sum for PoincarePolynomial {
    fn sum<I: Iterator<Item = PoincarePolynomial>>(iter: I) -> Self {
        iter.fold(PoincarePolynomial::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a PoincarePolynomial> for PoincarePolynomial {
    fn sum<I: Iterator<Item = &'a PoincarePolynomial>>(iter: I) -> Self {
        iter.fold(PoincarePolynomial::zero(), |acc, p| acc + p)
    }
}
