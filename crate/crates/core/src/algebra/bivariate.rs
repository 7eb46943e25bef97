use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{fmt_rational, rat, BigRational, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    S,
    T,
}

/// Polynomial in `s` and `t`; keys are `(deg_s, deg_t)`, zero terms are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn monomial(c: BigRational, ds: u32, dt: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(ds, dt, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigRational)>) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn add_term(&mut self, ds: u32, dt: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((ds, dt)).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(ds, dt));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ds: u32, dt: u32) -> BigRational {
        self.terms.get(&(ds, dt)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn map_terms(&self, f: impl Fn(u32, u32, &BigRational) -> Option<((u32, u32), BigRational)>) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(&(a, b), c)| f(a, b, c)))
    }

    /// Multiplies by `s^ds t^dt`.
    pub fn shift(&self, ds: u32, dt: u32) -> Self {
        self.map_terms(|a, b, c| Some(((a + ds, b + dt), c.clone())))
    }

    /// Divides by `s` (or `t`); `None` if some term has no factor of that variable.
    pub fn divide_by(&self, var: Var) -> Option<Self> {
        let ok = self.terms.keys().all(|&(a, b)| match var {
            Var::S => a > 0,
            Var::T => b > 0,
        });
        ok.then(|| {
            self.map_terms(|a, b, c| match var {
                Var::S => Some(((a - 1, b), c.clone())),
                Var::T => Some(((a, b - 1), c.clone())),
            })
        })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        self.map_terms(|a, b, c| Some(((a, b), c * k)))
    }

    /// Exchanges the roles of `s` and `t`.
    pub fn swap(&self) -> Self {
        self.map_terms(|a, b, c| Some(((b, a), c.clone())))
    }

    /// Ordinary partial derivative.
    pub fn partial(&self, var: Var) -> Self {
        self.map_terms(|a, b, c| match var {
            Var::S if a > 0 => Some(((a - 1, b), c * rat(a.into()))),
            Var::T if b > 0 => Some(((a, b - 1), c * rat(b.into()))),
            _ => None,
        })
    }

    /// Sets the other variable to one, leaving a polynomial in `keep`.
    pub fn restrict(&self, keep: Var) -> Polynomial {
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (&(a, b), c) in &self.terms {
            let d = match keep {
                Var::S => a,
                Var::T => b,
            } as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigRational::zero());
            }
            coeffs[d] += c;
        }
        Polynomial::new(coeffs)
    }

    /// Largest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }
}

/// Applies the Euler operator `D = x d/dx` in `var` exactly `l` times:
/// each monomial `s^a t^b` is scaled by `a^l` (or `b^l`).
pub fn apply_theta(p: &BivariatePolynomial, var: Var, l: u32) -> BivariatePolynomial {
    p.map_terms(|a, b, c| {
        let e = match var {
            Var::S => a,
            Var::T => b,
        };
        let factor = num_traits::pow(rat(e.into()), l as usize);
        Some(((a, b), c * factor))
    })
}

impl BivariatePolynomial {
    pub fn apply_theta(&self, var: Var, l: u32) -> Self {
        apply_theta(self, var, l)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        // highest power of s first reads naturally for the Eulerian family
        for (&(a, b), c) in self.terms.iter().rev() {
            let mut m = String::new();
            let cs = fmt_rational(c);
            let unit = a == 0 && b == 0;
            if cs != "1" || unit {
                m.push_str(&cs);
            }
            for (v, e) in [("s", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => m.push_str(v),
                    _ => m.push_str(&format!("{v}^{e}")),
                }
            }
            parts.push(m);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            self.terms
                .iter()
                .map(|(&(a, b), c)| (a, b, fmt_rational(c))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(c: i64, a: u32, b: u32) -> BivariatePolynomial {
        BivariatePolynomial::monomial(rat(c), a, b)
    }

    #[test]
    fn theta_examples() {
        assert_eq!(apply_theta(&mono(1, 2, 1), Var::S, 1), mono(2, 2, 1));
        assert_eq!(apply_theta(&mono(1, 1, 3), Var::T, 2), mono(9, 1, 3));
        let p = &mono(3, 2, 1) + &mono(-5, 0, 4);
        assert_eq!(apply_theta(&p, Var::S, 0), p);
        // constant terms are killed by a positive power
        assert!(apply_theta(&mono(7, 0, 2), Var::S, 1).is_zero());
    }

    #[test]
    fn no_zero_terms_are_stored() {
        let p = &mono(3, 1, 1) - &mono(3, 1, 1);
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
    }

    #[test]
    fn structural_ops() {
        let p = &mono(1, 2, 0) + &mono(8, 1, 1);
        assert_eq!(p.swap(), &mono(1, 0, 2) + &mono(8, 1, 1));
        assert_eq!(p.divide_by(Var::S), Some(&mono(1, 1, 0) + &mono(8, 0, 1)));
        assert_eq!(p.divide_by(Var::T), None);
        assert_eq!(p.partial(Var::S), &mono(2, 1, 0) + &mono(8, 0, 1));
        assert_eq!(p.restrict(Var::S), Polynomial::from_ints(&[0, 8, 1]));
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.to_string(), "s^2 + 8st");
    }

    proptest! {
        #[test]
        fn theta_is_linear_and_diagonal(
            terms in proptest::collection::vec(((0u32..6, 0u32..6), -20i64..20), 0..8),
            other in proptest::collection::vec(((0u32..6, 0u32..6), -20i64..20), 0..8),
            l in 0u32..4,
        ) {
            let p = BivariatePolynomial::from_terms(terms.iter().map(|&(k, c)| (k, rat(c))));
            let q = BivariatePolynomial::from_terms(other.iter().map(|&(k, c)| (k, rat(c))));
            prop_assert_eq!(apply_theta(&(&p + &q), Var::S, l), &apply_theta(&p, Var::S, l) + &apply_theta(&q, Var::S, l));
            for (&(a, b), c) in p.terms() {
                let lhs = apply_theta(&BivariatePolynomial::monomial(c.clone(), a, b), Var::S, l);
                let rhs = BivariatePolynomial::monomial(c * num_traits::pow(rat(a.into()), l as usize), a, b);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
