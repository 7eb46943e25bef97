use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::injection::{injection, match_up_down, motzkin_encode, motzkin_step_weights};
use super::word::step_weight;
use super::{enumerate_paths, path_weight, PathError, PathWord};
use crate::algebra::BigRational;
use crate::recurrence::{Cell, WeightSpec};
use crate::serde_support::rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepOptions {
    /// Largest `n - n0` for exhaustive pair enumeration.
    pub max_span: i64,
    /// Counterexamples kept in a report.
    pub max_listed: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { max_span: 10, max_listed: 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairViolation {
    pub p: PathWord,
    pub q: PathWord,
    pub p_prime: PathWord,
    pub q_prime: PathWord,
    #[serde(serialize_with = "rational")]
    pub before: BigRational,
    #[serde(serialize_with = "rational")]
    pub after: BigRational,
}

/// Pairwise and aggregate comparison of `wt(p)wt(q)` against `wt(p')wt(q')`.
#[derive(Debug, Clone, Serialize)]
pub struct MonotoneReport {
    pub n: i64,
    pub k: i64,
    pub anchor: Cell,
    pub pairs: u64,
    pub pairwise_holds: bool,
    pub violations: u64,
    /// Pairs with `wt(p)wt(q) = wt(p')wt(q')`.
    pub equal_pairs: u64,
    pub listed: Vec<PairViolation>,
    /// Motzkin step weights multiply to the swapped suffix weights for every pair.
    pub bookkeeping_holds: bool,
    /// `T(n,k)^2`.
    #[serde(serialize_with = "rational")]
    pub middle_squared: BigRational,
    /// `T(n,k-1) T(n,k+1)`.
    #[serde(serialize_with = "rational")]
    pub outer_product: BigRational,
    pub aggregate_holds: bool,
    pub aggregate_equality: bool,
}

fn paths_or_empty(anchor: Cell, end: Cell) -> Vec<PathWord> {
    enumerate_paths(anchor, end).unwrap_or_default()
}

fn check_span(n: i64, anchor: Cell, opts: &SweepOptions) -> Result<(), PathError> {
    let span = n - anchor.n;
    if span > opts.max_span {
        return Err(PathError::TooLarge { span, cap: opts.max_span });
    }
    Ok(())
}

fn suffix_weight(x: &PathWord, from: usize, w: &WeightSpec) -> BigRational {
    let cells = x.cells();
    (from..x.len()).fold(BigRational::one(), |a, j| a * step_weight(x.steps[j], cells[j], w))
}

struct Partial {
    pairs: u64,
    violations: u64,
    equal: u64,
    listed: Vec<PairViolation>,
    bookkeeping: bool,
}

impl Partial {
    fn empty() -> Self {
        Self { pairs: 0, violations: 0, equal: 0, listed: Vec::new(), bookkeeping: true }
    }

    fn merge(mut self, other: Self, cap: usize) -> Self {
        self.pairs += other.pairs;
        self.violations += other.violations;
        self.equal += other.equal;
        self.bookkeeping &= other.bookkeeping;
        self.listed.extend(other.listed);
        self.listed.sort_by(|a, b| (&a.p, &a.q).cmp(&(&b.p, &b.q)));
        self.listed.truncate(cap);
        self
    }
}

/// Exhaustive check over `P(n,k+1) x P(n,k-1)` from `anchor`.
pub fn verify_weight_monotone(
    k: i64,
    n: i64,
    w: &WeightSpec,
    anchor: Cell,
    opts: &SweepOptions,
) -> Result<MonotoneReport, PathError> {
    check_span(n, anchor, opts)?;
    let ps = paths_or_empty(anchor, Cell::new(n, k + 1));
    let qs = paths_or_empty(anchor, Cell::new(n, k - 1));
    let sum = |v: &[PathWord]| v.iter().fold(BigRational::zero(), |a, p| a + path_weight(p, w));
    let outer = sum(&ps) * sum(&qs);
    let middle = sum(&paths_or_empty(anchor, Cell::new(n, k)));
    let cap = opts.max_listed;

    let part = ps
        .par_iter()
        .map(|p| {
            let wp = path_weight(p, w);
            let mut acc = Partial::empty();
            for q in &qs {
                let out = injection(p, q).expect("endpoints are two columns apart");
                let before = &wp * path_weight(q, w);
                let after = path_weight(&out.p_prime, w) * path_weight(&out.q_prime, w);
                let mw = motzkin_step_weights(p, q, out.split, w);
                let prod = mw.iter().fold(BigRational::one(), |a, b| a * b);
                acc.bookkeeping &= prod == suffix_weight(p, out.split, w) * suffix_weight(q, out.split, w);
                acc.pairs += 1;
                acc.equal += u64::from(before == after);
                if before > after {
                    acc.violations += 1;
                    if acc.listed.len() < cap {
                        acc.listed.push(PairViolation {
                            p: p.clone(),
                            q: q.clone(),
                            p_prime: out.p_prime,
                            q_prime: out.q_prime,
                            before,
                            after,
                        });
                    }
                }
            }
            acc
        })
        .reduce(Partial::empty, |a, b| a.merge(b, cap));

    Ok(MonotoneReport {
        n,
        k,
        anchor,
        pairs: part.pairs,
        pairwise_holds: part.violations == 0,
        violations: part.violations,
        equal_pairs: part.equal,
        listed: part.listed,
        bookkeeping_holds: part.bookkeeping,
        aggregate_holds: &middle * &middle >= outer,
        aggregate_equality: &middle * &middle == outer,
        middle_squared: &middle * &middle,
        outer_product: outer,
    })
}

/// Per-column results of [`sweep_injection`].
#[derive(Debug, Clone, Serialize)]
pub struct ColumnSweep {
    pub k: i64,
    pub pairs: u64,
    pub distinct_images: u64,
    pub injective: bool,
    pub endpoints_hold: bool,
    pub shift_holds: bool,
    pub motzkin_valid: bool,
    pub up_down_matched: bool,
    /// Motzkin word length always equals `n - n0 - i`.
    pub length_is_suffix: bool,
    pub observed_lengths: BTreeSet<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectionSweep {
    pub n: i64,
    pub anchor: Cell,
    pub columns: Vec<ColumnSweep>,
    pub all_hold: bool,
}

fn shift_holds(p: &PathWord, q: &PathWord, p2: &PathWord, q2: &PathWord, i: usize) -> bool {
    (i..p.len()).all(|j| {
        let (from_q, in_p2) = (q.cell_after(j), p2.cell_after(j));
        let (from_p, in_q2) = (p.cell_after(j), q2.cell_after(j));
        in_p2.n == from_q.n && in_p2.k == from_q.k + 1 && in_q2.n == from_p.n && in_q2.k == from_p.k - 1
    })
}

fn sweep_column(n: i64, k: i64, anchor: Cell) -> ColumnSweep {
    let ps = paths_or_empty(anchor, Cell::new(n, k + 1));
    let qs = paths_or_empty(anchor, Cell::new(n, k - 1));
    let target = Cell::new(n, k);
    let span = (n - anchor.n) as usize;
    type Row = (Vec<(PathWord, PathWord)>, bool, bool, bool, bool, bool, BTreeSet<usize>);
    let rows: Vec<Row> = ps
        .par_iter()
        .map(|p| {
            let mut images = Vec::with_capacity(qs.len());
            let (mut ends, mut shift, mut valid, mut matched, mut len_ok) = (true, true, true, true, true);
            let mut lengths = BTreeSet::new();
            for q in &qs {
                let out = injection(p, q).expect("endpoints are two columns apart");
                ends &= out.p_prime.end() == target && out.q_prime.end() == target;
                shift &= shift_holds(p, q, &out.p_prime, &out.q_prime, out.split);
                match motzkin_encode(p, q, out.split) {
                    Ok(m) => {
                        matched &= match_up_down(&m).is_some();
                        len_ok &= m.len() == span - out.split;
                        lengths.insert(m.len());
                    }
                    Err(_) => valid = false,
                }
                images.push((out.p_prime, out.q_prime));
            }
            (images, ends, shift, valid, matched, len_ok, lengths)
        })
        .collect();
    let mut seen = HashSet::new();
    let mut col = ColumnSweep {
        k,
        pairs: 0,
        distinct_images: 0,
        injective: true,
        endpoints_hold: true,
        shift_holds: true,
        motzkin_valid: true,
        up_down_matched: true,
        length_is_suffix: true,
        observed_lengths: BTreeSet::new(),
    };
    for (images, ends, shift, valid, matched, len_ok, lengths) in rows {
        col.pairs += images.len() as u64;
        seen.extend(images);
        col.endpoints_hold &= ends;
        col.shift_holds &= shift;
        col.motzkin_valid &= valid;
        col.up_down_matched &= matched;
        col.length_is_suffix &= len_ok;
        col.observed_lengths.extend(lengths);
    }
    col.distinct_images = seen.len() as u64;
    col.injective = col.distinct_images == col.pairs;
    col
}

/// Runs the injection on every pair for every interior column of row `n`.
pub fn sweep_injection(n: i64, anchor: Cell, opts: &SweepOptions) -> Result<InjectionSweep, PathError> {
    check_span(n, anchor, opts)?;
    let hi = anchor.k + (n - anchor.n);
    let columns: Vec<ColumnSweep> = (anchor.k + 1..hi).map(|k| sweep_column(n, k, anchor)).collect();
    let all_hold = columns.iter().all(|c| {
        c.injective && c.endpoints_hold && c.shift_holds && c.motzkin_valid && c.up_down_matched && c.length_is_suffix
    });
    Ok(InjectionSweep { n, anchor, columns, all_hold })
}
