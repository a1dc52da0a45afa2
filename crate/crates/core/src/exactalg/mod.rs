//! Exact arithmetic: rationals, graded dimension series, bivariate graded
//! rings and their Hilbert functions, and rank over the rationals.

mod bivariate;
mod matrix;
mod poincare;

pub use bivariate::{BivariateHomogeneousPoly, GradedQuotientRing};
pub use matrix::RationalMatrix;
pub use poincare::{gs, PoincarePolynomial};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` (optional sign, surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), rat(-7));
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(format_rational(&ratio(4, 2)), "2");
        assert_eq!(format_rational(&ratio(-2, 6)), "-1/3");
    }

    #[test]
    fn big_values_do_not_overflow() {
        let big = parse_rational("123456789012345678901234567890/7").unwrap();
        let sq = &big * &big;
        assert_eq!(&sq / &big, big);
    }
}
