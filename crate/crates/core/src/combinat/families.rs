use num_bigint::BigInt;
use serde::Serialize;

use super::census::{cycle_leader_census, ordered_block_census, partition_census, subexceedant_census, DEFAULT_LIMIT};
use super::{CombinatError, LeaderCensus};
use crate::recurrence::{build_array, catalog_lookup, CatalogParams};

/// The four `(l,r)` leader-set families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Subexceedant functions; `k` counts leaders minus one.
    Eulerian,
    /// Permutations by cycle leaders.
    Stirling1,
    /// Set partitions by block minima.
    Stirling2,
    /// Partitions into linearly ordered blocks by block minima.
    Lah,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Eulerian, Family::Stirling1, Family::Stirling2, Family::Lah];

    /// Catalog entry whose array is indexed like the counting definition.
    pub fn catalog_name(self) -> &'static str {
        match self {
            Family::Eulerian => "lr-eulerian",
            Family::Stirling1 => "lr-stirling1",
            Family::Stirling2 => "lr-stirling2",
            Family::Lah => "lr-lah-leader",
        }
    }

    pub fn census(self, n: usize, limit: usize) -> Result<LeaderCensus, CombinatError> {
        match self {
            Family::Eulerian => subexceedant_census(n, limit),
            Family::Stirling1 => cycle_leader_census(n, limit),
            Family::Stirling2 => partition_census(n, limit),
            Family::Lah => ordered_block_census(n, limit),
        }
    }

    fn leaders_for(self, k: usize) -> usize {
        match self {
            Family::Eulerian => k + 1,
            _ => k,
        }
    }

    /// Columns `k` of row `n` inside the recurrence triangle; empty when `n < r`.
    pub fn k_range(self, n: usize, r: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::Eulerian if n >= r && n >= 1 => r.saturating_sub(1)..=n - 1,
            Family::Eulerian => 1..=0,
            _ if n >= r => r..=n,
            _ => 1..=0,
        }
    }

    pub fn bruteforce(self, n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
        Ok(self.census(n, DEFAULT_LIMIT)?.tuple_count(self.leaders_for(k), l, r))
    }

    /// Row `n` over [`Family::k_range`], from one census.
    pub fn row_bruteforce(self, n: usize, l: u32, r: usize) -> Result<Vec<BigInt>, CombinatError> {
        let c = self.census(n, DEFAULT_LIMIT)?;
        Ok(self.k_range(n, r).map(|k| c.tuple_count(self.leaders_for(k), l, r)).collect())
    }

    /// Row `n` over [`Family::k_range`], from the recurrence array.
    pub fn row_recurrence(self, n: usize, l: u32, r: usize) -> Result<Vec<BigInt>, CombinatError> {
        let spec = catalog_lookup(self.catalog_name(), &CatalogParams::with_lr(l, r as u32))?;
        if (n as i64) < spec.anchor.n {
            return Ok(Vec::new());
        }
        let arr = build_array(&spec, n as i64)?;
        Ok(self.k_range(n, r).map(|k| arr.get(n as i64, k as i64).to_integer()).collect())
    }

    pub fn recurrence(self, n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
        let spec = catalog_lookup(self.catalog_name(), &CatalogParams::with_lr(l, r as u32))?;
        if (n as i64) < spec.anchor.n {
            return Ok(BigInt::from(0));
        }
        let arr = build_array(&spec, n as i64)?;
        Ok(arr.get(n as i64, k as i64).to_integer())
    }
}

/// Number of `l`-tuples of subexceedant functions on `[n]` sharing a leader set `B ⊇ [r]` with `|B| = k+1`.
pub fn lr_eulerian_bruteforce(n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
    Family::Eulerian.bruteforce(n, k, l, r)
}

/// Row `n` of the census count for `k = r-1 ..= n-1`.
pub fn lr_eulerian_row_bruteforce(n: usize, l: u32, r: usize) -> Result<Vec<BigInt>, CombinatError> {
    Family::Eulerian.row_bruteforce(n, l, r)
}

pub fn lr_eulerian_recurrence(n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
    Family::Eulerian.recurrence(n, k, l, r)
}

/// Set partitions of `[n]` into `k` blocks with `1..r` in distinct blocks.
pub fn r_stirling2(n: usize, k: usize, r: usize) -> Result<BigInt, CombinatError> {
    Family::Stirling2.bruteforce(n, k, 1, r)
}

pub fn lr_stirling2_bruteforce(n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
    Family::Stirling2.bruteforce(n, k, l, r)
}

pub fn lr_stirling2_recurrence(n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
    Family::Stirling2.recurrence(n, k, l, r)
}

pub fn lr_stirling1_bruteforce(n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
    Family::Stirling1.bruteforce(n, k, l, r)
}

pub fn lr_stirling1_recurrence(n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
    Family::Stirling1.recurrence(n, k, l, r)
}

/// `r = 0` is allowed and means no separation constraint.
pub fn lr_lah_bruteforce(n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
    Family::Lah.bruteforce(n, k, l, r)
}

pub fn lr_lah_recurrence(n: usize, k: usize, l: u32, r: usize) -> Result<BigInt, CombinatError> {
    Family::Lah.recurrence(n, k, l, r)
}
