use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::census::{partition_census, permutation_run_census, subexceedant_census};
use super::CombinatError;
use crate::algebra::{binomial, factorial};
use crate::serde_support::bigint;

/// `k! S_r(n,k)` against `sum_{i=r}^{k} A_r(n,i-1) C(n-i,k-i)`.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCell {
    pub k: usize,
    #[serde(serialize_with = "bigint")]
    pub lhs: BigInt,
    /// Right side with `A_r` counted on permutations (descents, run leaders ⊇ [r]).
    #[serde(serialize_with = "bigint")]
    pub rhs_permutations: BigInt,
    /// Right side with `A_r` counted on subexceedant functions (leaders ⊇ [r]).
    #[serde(serialize_with = "bigint")]
    pub rhs_subexceedant: BigInt,
    pub holds: bool,
    /// `k! S_r(n,k) = r! * rhs_subexceedant`.
    pub holds_scaled: bool,
    /// `n = k = r`, where the boundary terms are not spelled out.
    pub degenerate: bool,
}

/// `A_r(n,k-1)` against `sum_{i=r}^{k} (-1)^{k-i} S_r(n,i) C(n-i,k-i) i!`.
#[derive(Debug, Clone, Serialize)]
pub struct CorollaryCell {
    pub k: usize,
    #[serde(serialize_with = "bigint")]
    pub lhs_permutations: BigInt,
    #[serde(serialize_with = "bigint")]
    pub lhs_subexceedant: BigInt,
    #[serde(serialize_with = "bigint")]
    pub rhs: BigInt,
    pub holds: bool,
    /// `r! A_r(n,k-1) = rhs` with the subexceedant count.
    pub holds_scaled: bool,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub r: usize,
    pub cells: Vec<IdentityCell>,
    pub corollary: Vec<CorollaryCell>,
    /// Every non-degenerate identity cell holds with the permutation count.
    pub identity_holds: bool,
    pub corollary_holds: bool,
    /// The permutation and subexceedant counts of `A_r(n,k)` agree for every `k`.
    pub routes_agree: bool,
    pub scaled_holds: bool,
}

/// Both sides by brute force; `n <= 8`.
pub fn verify_stirling_eulerian_identity(n: usize, r: usize) -> Result<IdentityReport, CombinatError> {
    if r == 0 || r > n {
        return Err(CombinatError::Invalid(format!("need 1 <= r <= n, got r = {r}, n = {n}")));
    }
    let perms = permutation_run_census(n, 8)?;
    let subex = subexceedant_census(n, 8)?;
    let parts = partition_census(n, 8)?;
    let a_perm = |k: usize| perms.tuple_count(k + 1, 1, r);
    let a_sub = |k: usize| subex.tuple_count(k + 1, 1, r);
    let s = |k: usize| parts.tuple_count(k, 1, r);
    let c = |a: usize, b: usize| binomial(a as u64, b as u64);
    let r_fact = factorial(r as u64);

    let mut cells = Vec::new();
    let mut corollary = Vec::new();
    for k in r..=n {
        let lhs = factorial(k as u64) * s(k);
        let (mut rp, mut rs) = (BigInt::zero(), BigInt::zero());
        let mut alt = BigInt::zero();
        for i in r..=k {
            rp += a_perm(i - 1) * c(n - i, k - i);
            rs += a_sub(i - 1) * c(n - i, k - i);
            let term = s(i) * c(n - i, k - i) * factorial(i as u64);
            if (k - i) % 2 == 0 {
                alt += term;
            } else {
                alt -= term;
            }
        }
        let degenerate = n == r && k == r;
        cells.push(IdentityCell {
            k,
            holds: lhs == rp,
            holds_scaled: lhs == &r_fact * &rs,
            lhs,
            rhs_permutations: rp,
            rhs_subexceedant: rs,
            degenerate,
        });
        let (lp, ls) = (a_perm(k - 1), a_sub(k - 1));
        corollary.push(CorollaryCell {
            k,
            holds: lp == alt,
            holds_scaled: &r_fact * &ls == alt,
            lhs_permutations: lp,
            lhs_subexceedant: ls,
            rhs: alt,
            degenerate,
        });
    }
    Ok(IdentityReport {
        n,
        r,
        identity_holds: cells.iter().all(|c| c.holds || c.degenerate),
        corollary_holds: corollary.iter().all(|c| c.holds || c.degenerate),
        routes_agree: (0..n).all(|k| a_perm(k) == a_sub(k)),
        scaled_holds: cells.iter().all(|c| c.holds_scaled) && corollary.iter().all(|c| c.holds_scaled),
        cells,
        corollary,
    })
}
