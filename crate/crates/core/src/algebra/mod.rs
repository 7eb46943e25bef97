//! Exact arithmetic: polynomials in one and two variables, sequence shape
//! predicates, gamma-basis expansion and Sturm root counting.
//!
//! Nothing in here touches floating point.

mod bivariate;
mod gamma;
mod poly;
mod sequence;
mod sturm;

pub use bivariate::{apply_theta, BivariatePolynomial, Var};
pub use gamma::{gamma_expand, is_palindromic, GammaVector};
pub use poly::Polynomial;
pub use sequence::{is_log_concave, is_unimodal, log_concavity_violations};
pub use sturm::{count_real_roots, is_real_rooted, squarefree_part, sturm_chain};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial is not palindromic about degree {n}")]
    NotPalindromic { n: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

/// Integer as a rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rat_big(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// `a/b` from machine integers. Panics if `b == 0`.
pub fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Parses `"-3"`, `"7/4"` or `"+2"`.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::BadRational(s.to_string());
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    match t.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => t.parse::<BigInt>().map(rat_big).map_err(|_| bad()),
    }
}

/// Decimal rendering: integers print bare, everything else as `p/q`.
pub fn fmt_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub(crate) fn sign(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.numer().sign() == num_bigint::Sign::Minus {
        -1
    } else {
        1
    }
}

/// Binomial coefficient as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse_rational("-3").unwrap(), rat(-3));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("+2").unwrap(), rat(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(fmt_rational(&rat(12)), "12");
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(7), BigInt::from(5040));
    }
}
