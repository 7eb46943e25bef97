use num_traits::Zero;
use serde::Serialize;

use super::{AlgebraError, BigRational, Polynomial};
use crate::serde_support::rational_vec;

/// Coefficients of a palindromic polynomial in the basis `t^i (1+t)^(n-2i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaVector {
    #[serde(serialize_with = "rational_vec")]
    pub gammas: Vec<BigRational>,
    /// Degree bound of the expansion; the center of symmetry is `n / 2`.
    pub n: usize,
}

impl GammaVector {
    /// `sum_i gamma_i t^i (1+t)^(n-2i)`.
    pub fn reconstruct(&self) -> Polynomial {
        self.gammas
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (i, g)| {
                &acc + &basis(i, self.n).scale(g)
            })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| *g >= BigRational::zero())
    }
}

fn basis(i: usize, n: usize) -> Polynomial {
    let shifted = Polynomial::one_plus_x_pow(n - 2 * i);
    let mut coeffs = vec![BigRational::zero(); i];
    coeffs.extend(shifted.into_coeffs());
    Polynomial::new(coeffs)
}

/// `coeff_k == coeff_{center - k}` for all `k`. The zero polynomial is palindromic.
///
/// `center_degree` must bound the degree; a polynomial whose degree exceeds it
/// is reported as not palindromic.
pub fn is_palindromic(p: &Polynomial, center_degree: usize) -> bool {
    if p.degree().is_some_and(|d| d > center_degree) {
        return false;
    }
    (0..=center_degree / 2).all(|k| p.coeff(k) == p.coeff(center_degree - k))
}

/// Expands a polynomial palindromic about `n / 2` in the gamma basis.
///
/// Each step takes the lowest surviving coefficient as the next gamma and
/// subtracts the matching basis element; the basis is triangular, so the
/// expansion is unique when it exists.
pub fn gamma_expand(p: &Polynomial, n: usize) -> Result<GammaVector, AlgebraError> {
    if !is_palindromic(p, n) {
        return Err(AlgebraError::NotPalindromic { n });
    }
    let mut rest = p.clone();
    let mut gammas = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            rest = &rest - &basis(i, n).scale(&g);
        }
        gammas.push(g);
    }
    if !rest.is_zero() {
        return Err(AlgebraError::NotPalindromic { n });
    }
    Ok(GammaVector { gammas, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn g(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn palindromic_examples() {
        assert!(is_palindromic(&Polynomial::from_ints(&[1, 155, 155, 1]), 3));
        assert!(!is_palindromic(&Polynomial::from_ints(&[1, 2, 3]), 2));
        assert!(is_palindromic(&Polynomial::zero(), 0));
        assert!(is_palindromic(&Polynomial::zero(), 7));
        // degree gap at the top: 0 + t + 0 is palindromic about 1 with center 2
        assert!(is_palindromic(&Polynomial::from_ints(&[0, 1]), 2));
        assert!(!is_palindromic(&Polynomial::from_ints(&[1, 1]), 2));
        assert!(!is_palindromic(&Polynomial::from_ints(&[1, 0, 0, 1]), 2));
    }

    #[test]
    fn published_gamma_rows() {
        let cases: [(&[i64], usize, &[i64]); 5] = [
            (&[1, 16, 1], 2, &[1, 14]),
            (&[1, 155, 155, 1], 3, &[1, 152]),
            (&[1, 1304, 8370, 1304, 1], 4, &[1, 1300, 5764]),
            (&[1, 10557, 309446, 309446, 10557, 1], 5, &[1, 10552, 277780]),
            (&[1, 2, 1], 2, &[1, 0]),
        ];
        for (p, n, want) in cases {
            let gv = gamma_expand(&Polynomial::from_ints(p), n).unwrap();
            assert_eq!(gv.gammas, g(want));
            assert_eq!(gv.reconstruct(), Polynomial::from_ints(p));
        }
    }

    #[test]
    fn rejects_non_palindromic() {
        assert_eq!(
            gamma_expand(&Polynomial::from_ints(&[1, 2, 3]), 2),
            Err(AlgebraError::NotPalindromic { n: 2 })
        );
    }

    #[test]
    fn gamma_of_zero_and_constants() {
        let z = gamma_expand(&Polynomial::zero(), 3).unwrap();
        assert_eq!(z.gammas, g(&[0, 0]));
        let c = gamma_expand(&Polynomial::from_ints(&[4]), 0).unwrap();
        assert_eq!(c.gammas, g(&[4]));
    }

    proptest! {
        #[test]
        fn expansion_reconstructs_palindromes(n in 0usize..=12, half in proptest::collection::vec(-50i64..50, 7)) {
            let coeffs: Vec<i64> = (0..=n).map(|k| half[k.min(n - k)]).collect();
            let p = Polynomial::from_ints(&coeffs);
            let gv = gamma_expand(&p, n).unwrap();
            prop_assert_eq!(gv.gammas.len(), n / 2 + 1);
            prop_assert_eq!(gv.reconstruct(), p);
        }
    }
}
