use std::fmt;

use serde::{Serialize, Serializer};

use super::word::step_weight;
use super::{PathError, PathWord, Step};
use crate::algebra::BigRational;
use crate::recurrence::WeightSpec;

/// Image of a pair under the injection, with the split index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Injected {
    pub p_prime: PathWord,
    pub q_prime: PathWord,
    pub split: usize,
}

/// Sends `p` ending at `(n, k+1)` and `q` ending at `(n, k-1)` to two paths ending at `(n, k)`.
///
/// `i` is the largest index with `#C(p_1..p_i) - #C(q_1..q_i) = 1`; the suffixes after `i` are swapped.
pub fn injection(p: &PathWord, q: &PathWord) -> Result<Injected, PathError> {
    let (pe, qe) = (p.end(), q.end());
    if p.start != q.start || pe.n != qe.n || pe.k != qe.k + 2 {
        return Err(PathError::BadEndpoints { p: pe, q: qe });
    }
    let len = p.len();
    let mut diff = 2i64;
    for i in (0..len).rev() {
        diff -= i64::from(p.steps[i] == Step::C) - i64::from(q.steps[i] == Step::C);
        if diff == 1 {
            let mut ps = p.steps[..i].to_vec();
            ps.extend_from_slice(&q.steps[i..]);
            let mut qs = q.steps[..i].to_vec();
            qs.extend_from_slice(&p.steps[i..]);
            return Ok(Injected {
                p_prime: PathWord::new(p.start, ps),
                q_prime: PathWord::new(q.start, qs),
                split: i,
            });
        }
    }
    Err(PathError::NoSplit)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MotzkinStep {
    U,
    D,
    H1,
    H2,
}

impl MotzkinStep {
    pub fn delta(self) -> i64 {
        match self {
            MotzkinStep::U => 1,
            MotzkinStep::D => -1,
            _ => 0,
        }
    }

    fn from_pair(p: Step, q: Step) -> Self {
        match (p, q) {
            (Step::N, Step::C) => MotzkinStep::U,
            (Step::C, Step::N) => MotzkinStep::D,
            (Step::N, Step::N) => MotzkinStep::H1,
            (Step::C, Step::C) => MotzkinStep::H2,
        }
    }
}

impl fmt::Display for MotzkinStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MotzkinStep::U => "U",
            MotzkinStep::D => "D",
            MotzkinStep::H1 => "H1",
            MotzkinStep::H2 => "H2",
        })
    }
}

impl Serialize for MotzkinStep {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A 2-Motzkin word with running heights (`heights[0] = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MotzkinWord {
    pub steps: Vec<MotzkinStep>,
    pub heights: Vec<i64>,
}

impl MotzkinWord {
    pub fn from_steps(steps: Vec<MotzkinStep>) -> Self {
        let mut heights = vec![0];
        for s in &steps {
            heights.push(heights.last().unwrap() + s.delta());
        }
        Self { steps, heights }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn final_height(&self) -> i64 {
        *self.heights.last().unwrap()
    }

    /// `None` when valid: ends at -1, last step `D`, proper prefixes non-negative.
    pub fn validity_error(&self) -> Option<String> {
        if self.steps.last() != Some(&MotzkinStep::D) {
            return Some(format!("last step of {self} is not D"));
        }
        if self.final_height() != -1 {
            return Some(format!("{self} ends at height {}", self.final_height()));
        }
        if let Some(m) = self.heights[..self.len()].iter().position(|&h| h < 0) {
            return Some(format!("{self} drops below 0 after {m} steps"));
        }
        None
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Pairs the reversed suffixes of `p` and `q` after index `i`.
pub fn motzkin_encode(p: &PathWord, q: &PathWord, i: usize) -> Result<MotzkinWord, PathError> {
    if p.len() != q.len() || i >= p.len() {
        return Err(PathError::InvalidSplit(format!("split {i} outside paths of length {} and {}", p.len(), q.len())));
    }
    let steps = (i..p.len()).rev().map(|j| MotzkinStep::from_pair(p.steps[j], q.steps[j])).collect();
    let word = MotzkinWord::from_steps(steps);
    match word.validity_error() {
        None => Ok(word),
        Some(reason) => Err(PathError::InvalidSplit(reason)),
    }
}

/// Weight of each Motzkin step, in word order: the product of the two source step weights.
pub fn motzkin_step_weights(p: &PathWord, q: &PathWord, i: usize, w: &WeightSpec) -> Vec<BigRational> {
    let (pc, qc) = (p.cells(), q.cells());
    (i..p.len())
        .rev()
        .map(|j| step_weight(p.steps[j], pc[j], w) * step_weight(q.steps[j], qc[j], w))
        .collect()
}

/// Matches each `U` with the first later `D` returning to its height.
///
/// Returns `(u, d)` index pairs, or `None` if some `U` is unmatched or the word does not end
/// with a single unmatched final `D`.
pub fn match_up_down(word: &MotzkinWord) -> Option<Vec<(usize, usize)>> {
    let mut open = Vec::new();
    let mut pairs = Vec::new();
    let mut unmatched_d = Vec::new();
    for (idx, s) in word.steps.iter().enumerate() {
        match s {
            MotzkinStep::U => open.push(idx),
            MotzkinStep::D => match open.pop() {
                Some(u) => {
                    if word.heights[u] != word.heights[idx + 1] {
                        return None;
                    }
                    pairs.push((u, idx));
                }
                None => unmatched_d.push(idx),
            },
            _ => {}
        }
    }
    (open.is_empty() && unmatched_d == [word.len().checked_sub(1)?]).then_some(pairs)
}
