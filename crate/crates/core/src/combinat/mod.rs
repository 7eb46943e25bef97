//! Brute-force oracles over subexceedant functions, permutations and set partitions,
//! the bijection Λ, and generalized Eulerian polynomials.

mod census;
mod eulerian;
mod families;
mod identity;
mod lambda;

pub use census::{
    cycle_leader_census, ordered_block_census, partition_census, permutation_run_census, set_partitions,
    subexceedant_census, LeaderCensus, DEFAULT_LIMIT,
};
pub use eulerian::{
    bivariate_eulerian, eulerian_polynomial, eulerian_report, l2_expanded_step, l2_recurrence_check, pde_step,
    EulerianReport,
};
pub use families::{
    lr_eulerian_bruteforce, lr_eulerian_recurrence, lr_eulerian_row_bruteforce, lr_lah_bruteforce, lr_lah_recurrence,
    lr_stirling1_bruteforce, lr_stirling1_recurrence, lr_stirling2_bruteforce, lr_stirling2_recurrence, r_stirling2,
    Family,
};
pub use identity::{verify_stirling_eulerian_identity, CorollaryCell, IdentityCell, IdentityReport};
pub use lambda::{lambda_inverse, lambda_map};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::recurrence::RecurrenceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
}

/// A set of positive integers up to 32, as a bitmask (bit `i-1` for `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LeaderSet(pub u32);

impl LeaderSet {
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << (i - 1);
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// `{1, ..., r}` is a subset.
    pub fn contains_prefix(&self, r: usize) -> bool {
        let mask = if r >= 32 { u32::MAX } else { (1u32 << r) - 1 };
        self.0 & mask == mask
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }
}

impl FromIterator<usize> for LeaderSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = LeaderSet::default();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for LeaderSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for LeaderSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}

fn parse_one_line(s: &str) -> Result<Vec<usize>, CombinatError> {
    let s = s.trim();
    let parts: Vec<&str> = if s.contains(',') {
        s.split(',').map(str::trim).collect()
    } else {
        s.split("").filter(|p| !p.is_empty()).collect()
    };
    parts
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| CombinatError::Invalid(format!("bad entry {p:?} in {s:?}"))))
        .collect()
}

fn fmt_one_line(v: &[usize]) -> String {
    if v.len() <= 9 && v.iter().all(|&x| x <= 9) {
        v.iter().map(|x| x.to_string()).collect()
    } else {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// `f : [n] -> [n]` with `1 <= f(i) <= i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubexceedantFunction(Vec<usize>);

impl SubexceedantFunction {
    pub fn new(values: Vec<usize>) -> Result<Self, CombinatError> {
        if let Some((i, v)) = values.iter().enumerate().find(|&(i, &v)| v == 0 || v > i + 1) {
            return Err(CombinatError::Invalid(format!("f({}) = {v} is not in [1, {}]", i + 1, i + 1)));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `f(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Indices `i` with `f(i)` not in `f([i-1])`.
    pub fn block_leaders(&self) -> LeaderSet {
        let mut seen = LeaderSet::default();
        let mut out = LeaderSet::default();
        for (i, &v) in self.0.iter().enumerate() {
            if !seen.contains(v) {
                out.insert(i + 1);
                seen.insert(v);
            }
        }
        out
    }

    /// `f(S)` for a set of indices.
    pub fn image_of(&self, s: LeaderSet) -> LeaderSet {
        s.elements().into_iter().map(|i| self.at(i)).collect()
    }
}

impl FromStr for SubexceedantFunction {
    type Err = CombinatError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_one_line(s)?)
    }
}

impl fmt::Display for SubexceedantFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_one_line(&self.0))
    }
}

impl Serialize for SubexceedantFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, CombinatError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(CombinatError::Invalid(format!("{values:?} is not a permutation of [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Self(values))
    }

    pub(crate) fn new_unchecked(values: Vec<usize>) -> Self {
        Self(values)
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions `i` with `π(i) > π(i+1)`, counted.
    pub fn descents(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// First letters of the maximal increasing runs.
    pub fn block_leaders(&self) -> LeaderSet {
        let mut out = LeaderSet::default();
        for (i, &v) in self.0.iter().enumerate() {
            if i == 0 || self.0[i - 1] > v {
                out.insert(v);
            }
        }
        out
    }

    /// Minimum of each cycle.
    pub fn cycle_leaders(&self) -> LeaderSet {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        let mut out = LeaderSet::default();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            out.insert(start);
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j - 1];
            }
        }
        out
    }
}

impl FromStr for Permutation {
    type Err = CombinatError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_one_line(s)?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_one_line(&self.0))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn block_leaders_f(f: &SubexceedantFunction) -> LeaderSet {
    f.block_leaders()
}

pub fn descents(p: &Permutation) -> usize {
    p.descents()
}

pub fn perm_block_leaders(p: &Permutation) -> LeaderSet {
    p.block_leaders()
}
