use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{CombinatError, LeaderSet, Permutation, SubexceedantFunction};

/// Largest `n` enumerated by default (9! = 362880 objects).
pub const DEFAULT_LIMIT: usize = 9;

/// Number of objects per leader set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeaderCensus {
    pub n: usize,
    pub counts: BTreeMap<LeaderSet, u64>,
}

impl LeaderCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `sum count(B)^l` over leader sets `B` with `|B| = size` and `[r] ⊆ B`.
    ///
    /// This is the number of `l`-tuples of objects sharing one such leader set.
    pub fn tuple_count(&self, size: usize, l: u32, r: usize) -> BigInt {
        self.counts
            .iter()
            .filter(|(b, _)| b.len() == size && b.contains_prefix(r))
            .map(|(_, &c)| num_traits::pow(BigInt::from(c), l as usize))
            .fold(BigInt::zero(), |a, b| a + b)
    }
}

fn check(n: usize, limit: usize) -> Result<(), CombinatError> {
    if n > limit || n > 20 {
        return Err(CombinatError::TooLarge { n, limit: limit.min(20) });
    }
    Ok(())
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn merge(mut a: BTreeMap<LeaderSet, u64>, b: BTreeMap<LeaderSet, u64>) -> BTreeMap<LeaderSet, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Parallel census over an index space `0..size` decoded by `leaders`.
fn census_by_index(n: usize, size: u64, leaders: impl Fn(u64) -> LeaderSet + Sync) -> LeaderCensus {
    let counts = (0..size)
        .into_par_iter()
        .fold(BTreeMap::new, |mut m, idx| {
            *m.entry(leaders(idx)).or_insert(0) += 1;
            m
        })
        .reduce(BTreeMap::new, merge);
    LeaderCensus { n, counts }
}

/// Mixed-radix decoding: digit `i` lies in `1..=i`.
pub(crate) fn subexceedant_from_index(n: usize, mut idx: u64) -> SubexceedantFunction {
    let mut v = Vec::with_capacity(n);
    for i in 1..=n as u64 {
        v.push((1 + idx % i) as usize);
        idx /= i;
    }
    SubexceedantFunction(v)
}

/// Lehmer-code decoding in lexicographic order.
pub(crate) fn permutation_from_index(n: usize, mut idx: u64) -> Permutation {
    let mut avail: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let j = (idx / f) as usize;
        idx %= f;
        out.push(avail.remove(j));
    }
    Permutation::new_unchecked(out)
}

/// Block-leader census of all `n!` subexceedant functions on `[n]`.
pub fn subexceedant_census(n: usize, limit: usize) -> Result<LeaderCensus, CombinatError> {
    check(n, limit)?;
    Ok(census_by_index(n, factorial(n), |i| subexceedant_from_index(n, i).block_leaders()))
}

/// Cycle-leader census of all permutations of `[n]`.
pub fn cycle_leader_census(n: usize, limit: usize) -> Result<LeaderCensus, CombinatError> {
    check(n, limit)?;
    Ok(census_by_index(n, factorial(n), |i| permutation_from_index(n, i).cycle_leaders()))
}

/// Census of permutations by `(run-leader set)`; descents are `|set| - 1`.
pub fn permutation_run_census(n: usize, limit: usize) -> Result<LeaderCensus, CombinatError> {
    check(n, limit)?;
    Ok(census_by_index(n, factorial(n), |i| permutation_from_index(n, i).block_leaders()))
}

/// All set partitions of `[n]` as restricted-growth strings (`a_1 = 0`, `a_i <= 1 + max a_<i`).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max + 1 {
            cur.push(v);
            rec(n, cur, max.max(v), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(n, &mut vec![0], 0, &mut out);
    }
    out
}

/// Block minima and block sizes of an RGS.
fn blocks(rgs: &[usize]) -> (LeaderSet, Vec<usize>) {
    let k = rgs.iter().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0; k];
    let mut leaders = LeaderSet::default();
    for (i, &b) in rgs.iter().enumerate() {
        if sizes[b] == 0 {
            leaders.insert(i + 1);
        }
        sizes[b] += 1;
    }
    (leaders, sizes)
}

fn rgs_census(n: usize, limit: usize, weight: impl Fn(&[usize]) -> u64 + Sync) -> Result<LeaderCensus, CombinatError> {
    check(n, limit)?;
    let counts = set_partitions(n)
        .par_iter()
        .fold(BTreeMap::new, |mut m, rgs| {
            let (leaders, sizes) = blocks(rgs);
            *m.entry(leaders).or_insert(0) += weight(&sizes);
            m
        })
        .reduce(BTreeMap::new, merge);
    Ok(LeaderCensus { n, counts })
}

/// Block-minimum census of set partitions of `[n]`.
pub fn partition_census(n: usize, limit: usize) -> Result<LeaderCensus, CombinatError> {
    rgs_census(n, limit, |_| 1)
}

/// Census of partitions into linearly ordered blocks: each set partition counts `prod |B|!` times.
pub fn ordered_block_census(n: usize, limit: usize) -> Result<LeaderCensus, CombinatError> {
    rgs_census(n, limit, |sizes| sizes.iter().map(|&s| factorial(s)).product())
}
