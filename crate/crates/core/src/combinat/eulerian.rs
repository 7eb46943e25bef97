use serde::Serialize;

use super::families::Family;
use super::CombinatError;
use crate::algebra::{
    apply_theta, count_real_roots, gamma_expand, is_palindromic, is_real_rooted, rat, BivariatePolynomial,
    GammaVector, Polynomial, Var,
};

/// `(1/s) D_s^l (st A) + (1/t) D_t^l (st A)` with `D_x = x d/dx`.
pub fn pde_step(a: &BivariatePolynomial, l: u32) -> BivariatePolynomial {
    let st = a.shift(1, 1);
    let left = apply_theta(&st, Var::S, l).divide_by(Var::S).expect("every term carries s");
    let right = apply_theta(&st, Var::T, l).divide_by(Var::T).expect("every term carries t");
    &left + &right
}

/// `(s+t)A + 3st(∂_s+∂_t)A + st(s∂_s² + t∂_t²)A`, the `l = 2` step written out.
pub fn l2_expanded_step(a: &BivariatePolynomial) -> BivariatePolynomial {
    let first = &a.shift(1, 0) + &a.shift(0, 1);
    let grad = &a.partial(Var::S) + &a.partial(Var::T);
    let second = &a.partial(Var::S).partial(Var::S).shift(1, 0) + &a.partial(Var::T).partial(Var::T).shift(0, 1);
    let mid = grad.shift(1, 1).scale(&rat(3));
    &(&first + &mid) + &second.shift(1, 1)
}

/// `A_n^{(l)}(s,t)`: the seed `1` for `n <= 1`, then `n - 1` PDE steps.
pub fn bivariate_eulerian(n: usize, l: u32) -> BivariatePolynomial {
    let mut a = BivariatePolynomial::one();
    for _ in 1..n {
        a = pde_step(&a, l);
    }
    a
}

/// `A_n^{(l)}(t) = sum_k A^{(l)}(n,k) t^k`, read off the `s`-degrees.
pub fn eulerian_polynomial(n: usize, l: u32) -> Polynomial {
    bivariate_eulerian(n, l).restrict(Var::S)
}

/// After `n - 1` steps from `1`, the general step at `l = 2` and the expanded form agree.
pub fn l2_recurrence_check(n: usize) -> bool {
    let mut a = BivariatePolynomial::one();
    for _ in 1..n {
        a = pde_step(&a, 2);
    }
    pde_step(&a, 2) == l2_expanded_step(&a)
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerianReport {
    pub n: usize,
    pub l: u32,
    pub polynomial: Polynomial,
    pub bivariate: BivariatePolynomial,
    pub palindromic: bool,
    pub symmetric: bool,
    pub gamma: Option<GammaVector>,
    pub gamma_nonnegative: Option<bool>,
    pub distinct_real_roots: usize,
    pub real_rooted: bool,
    /// Recurrence array row equals the census row (when the census ran).
    pub recurrence_agrees: bool,
    pub bruteforce_agrees: Option<bool>,
}

/// Coefficients, symmetry, gamma vector and root data for one row.
pub fn eulerian_report(n: usize, l: u32, bruteforce: bool) -> Result<EulerianReport, CombinatError> {
    if n == 0 || l == 0 {
        return Err(CombinatError::Invalid("need n >= 1 and l >= 1".into()));
    }
    let bivariate = bivariate_eulerian(n, l);
    let polynomial = bivariate.restrict(Var::S);
    let center = n - 1;
    let gamma = gamma_expand(&polynomial, center).ok();
    let coeffs: Vec<_> = (0..n).map(|k| polynomial.coeff(k).to_integer()).collect();
    let recurrence_agrees = Family::Eulerian.row_recurrence(n, l, 1)? == coeffs;
    let bruteforce_agrees = if bruteforce {
        Some(Family::Eulerian.row_bruteforce(n, l, 1)? == coeffs)
    } else {
        None
    };
    let roots = count_real_roots(&polynomial).unwrap_or(0);
    Ok(EulerianReport {
        n,
        l,
        palindromic: is_palindromic(&polynomial, center),
        symmetric: bivariate.swap() == bivariate,
        gamma_nonnegative: gamma.as_ref().map(|g| g.is_nonnegative()),
        gamma,
        distinct_real_roots: roots,
        real_rooted: !polynomial.is_zero() && is_real_rooted(&polynomial).unwrap_or(false),
        recurrence_agrees,
        bruteforce_agrees,
        polynomial,
        bivariate,
    })
}
