//! Bounded exhaustive checks of sufficient conditions for row log-concavity.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{fmt_rational, rat, BigRational};
use crate::recurrence::{build_array, AffineParams, RecurrenceError, RecurrenceSpec, RowView, WeightSpec};
use crate::serde_support::rational;

/// Witnesses kept per report; `total_witnesses` counts all of them.
pub const WITNESS_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

/// A violated inequality `lhs <= rhs` (or `lhs >= rhs`, per `inequality`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub clause: String,
    /// Free indices of the instance, e.g. `[n, k]` or `[n1, k1, k2, n2, l1, l2]`.
    pub at: Vec<i64>,
    pub inequality: String,
    #[serde(serialize_with = "rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "rational")]
    pub rhs: BigRational,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub max_n: Option<i64>,
    pub verdict: Verdict,
    /// Inequality instances evaluated.
    pub checked: u64,
    pub total_witnesses: u64,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl ConditionReport {
    fn new(condition: &str, max_n: Option<i64>, mut found: Vec<Witness>, checked: u64, notes: Vec<String>) -> Self {
        found.sort();
        let total = found.len() as u64;
        found.truncate(WITNESS_CAP);
        Self {
            condition: condition.to_string(),
            max_n,
            verdict: if found.is_empty() { Verdict::Holds } else { Verdict::Fails },
            checked,
            total_witnesses: total,
            witnesses: found,
            notes,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Cells whose weights enter a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanRegion {
    /// Rows `n0+1..=max_n`, columns `k0..=k0+(n-n0)`: the cells lattice paths visit.
    #[default]
    Structural,
    /// The structural columns widened by one on each side.
    Extended,
}

impl ScanRegion {
    fn pad(self) -> i64 {
        match self {
            ScanRegion::Structural => 0,
            ScanRegion::Extended => 1,
        }
    }

    fn rows(self, spec: &RecurrenceSpec, max_n: i64) -> Vec<(i64, i64, i64)> {
        (spec.anchor.n + 1..=max_n)
            .map(|n| {
                let (lo, hi) = spec.k_range(n);
                (n, lo - self.pad(), hi + self.pad())
            })
            .collect()
    }

    fn contains(self, spec: &RecurrenceSpec, n: i64, k: i64) -> bool {
        let (lo, hi) = spec.k_range(n);
        n > spec.anchor.n && lo - self.pad() <= k && k <= hi + self.pad()
    }

    fn note(self) -> String {
        format!("region: {}", match self {
            ScanRegion::Structural => "structural triangle",
            ScanRegion::Extended => "triangle widened by one column on each side",
        })
    }
}

#[derive(Clone, Copy)]
enum Side {
    C,
    D,
}

fn eval(w: &WeightSpec, side: Side, n: i64, k: i64) -> BigRational {
    match side {
        Side::C => w.c(n, k),
        Side::D => w.d(n, k),
    }
}

struct Scan {
    found: Vec<Witness>,
    checked: u64,
}

impl Scan {
    fn new() -> Self {
        Self { found: Vec::new(), checked: 0 }
    }

    /// Records `lhs <= rhs`; skipped when any factor is negative (outside the weight domain).
    fn le(&mut self, clause: &str, at: Vec<i64>, inequality: &str, lhs: &[&BigRational], rhs: &[&BigRational]) {
        if lhs.iter().chain(rhs).any(|v| **v < BigRational::zero()) {
            return;
        }
        self.le_values(clause, at, inequality, product(lhs), product(rhs));
    }

    fn le_values(&mut self, clause: &str, at: Vec<i64>, inequality: &str, lhs: BigRational, rhs: BigRational) {
        self.checked += 1;
        if lhs > rhs {
            self.found.push(Witness { clause: clause.into(), at, inequality: inequality.into(), lhs, rhs });
        }
    }
}

fn product(vs: &[&BigRational]) -> BigRational {
    vs.iter().fold(rat(1), |a, b| a * *b)
}

/// `w(n,k-1) w(n,k+1) <= w(n,k)^2` at every interior center of the region.
fn log_concave_in_k(scan: &mut Scan, spec: &RecurrenceSpec, max_n: i64, region: ScanRegion, side: Side, clause: &str) {
    let w = &spec.weights;
    for (n, lo, hi) in region.rows(spec, max_n) {
        for k in lo + 1..hi {
            let (a, b, c) = (eval(w, side, n, k - 1), eval(w, side, n, k), eval(w, side, n, k + 1));
            scan.le(clause, vec![n, k], "w(n,k-1)w(n,k+1) <= w(n,k)^2", &[&a, &c], &[&b, &b]);
        }
    }
}

/// Concavity of `c` and `d` in `k`.
pub fn check_kurtz(spec: &RecurrenceSpec, max_n: i64, region: ScanRegion) -> ConditionReport {
    let w = &spec.weights;
    let mut scan = Scan::new();
    for (side, clause) in [(Side::C, "c concave"), (Side::D, "d concave")] {
        for (n, lo, hi) in region.rows(spec, max_n) {
            for k in lo + 1..hi {
                let (a, b, c) = (eval(w, side, n, k - 1), eval(w, side, n, k), eval(w, side, n, k + 1));
                if [&a, &b, &c].iter().any(|v| **v < BigRational::zero()) {
                    continue;
                }
                scan.le_values(clause, vec![n, k], "w(n,k-1)+w(n,k+1) <= 2w(n,k)", &a + &c, rat(2) * &b);
            }
        }
    }
    ConditionReport::new("kurtz", Some(max_n), scan.found, scan.checked, vec![region.note()])
}

/// Log-concavity of `c`, `d` plus the cross-product inequality.
pub fn check_sagan(spec: &RecurrenceSpec, max_n: i64, region: ScanRegion) -> ConditionReport {
    let w = &spec.weights;
    let mut scan = Scan::new();
    log_concave_in_k(&mut scan, spec, max_n, region, Side::C, "c log-concave");
    log_concave_in_k(&mut scan, spec, max_n, region, Side::D, "d log-concave");
    let mut integral = true;
    for (n, lo, hi) in region.rows(spec, max_n) {
        for k in lo..=hi {
            integral &= w.c(n, k).is_integer() && w.d(n, k).is_integer();
        }
        for k in lo + 1..hi {
            let vals = [
                w.d(n, k - 1),
                w.c(n, k + 1),
                w.d(n, k + 1),
                w.c(n, k - 1),
                w.d(n, k),
                w.c(n, k),
            ];
            if vals.iter().any(|v| *v < BigRational::zero()) {
                continue;
            }
            let lhs = &vals[0] * &vals[1] + &vals[2] * &vals[3];
            let rhs = rat(2) * &vals[4] * &vals[5];
            scan.le_values(
                "cross",
                vec![n, k],
                "d(n,k-1)c(n,k+1)+d(n,k+1)c(n,k-1) <= 2d(n,k)c(n,k)",
                lhs,
                rhs,
            );
        }
    }
    let mut notes = vec![region.note()];
    if !integral {
        notes.push("weights take non-integer values on the scanned region; the integrality hypothesis is not met".into());
    }
    ConditionReport::new("sagan", Some(max_n), scan.found, scan.checked, notes)
}

/// The constraint list of condition (ii), checked literally.
fn tuple_constraints(n1: i64, k1: i64, k2: i64, n2: i64, l1: i64, l2: i64) -> bool {
    n2 > n1
        && l2 > k2
        && k2 > k1
        && l2 > l1
        && l1 > k1
        && k2 - k1 == l2 - l1 + 1
        && n2 - n1 >= l2 - k2
        && n2 - n1 >= l1 - k1
}

fn condition_ii(spec: &RecurrenceSpec, max_n: i64, region: ScanRegion) -> Scan {
    let w = &spec.weights;
    let rows = region.rows(spec, max_n);
    let (k_min, k_max) = rows.iter().fold((i64::MAX, i64::MIN), |(a, b), &(_, lo, hi)| (a.min(lo), b.max(hi)));
    let partials: Vec<Scan> = rows
        .par_iter()
        .map(|&(n1, _, _)| {
            let mut scan = Scan::new();
            for n2 in n1 + 1..=max_n {
                for k1 in k_min..=k_max {
                    for l2 in k1 + 2..=k_max {
                        for l1 in k1 + 1..l2 {
                            let k2 = l2 - l1 + 1 + k1;
                            if !tuple_constraints(n1, k1, k2, n2, l1, l2) {
                                continue;
                            }
                            let cells = [
                                (n1, k1),
                                (n1, k2),
                                (n2, l1),
                                (n2, l2),
                                (n1, k1 + 1),
                                (n1, k2 - 1),
                                (n2, l1 + 1),
                                (n2, l2 - 1),
                            ];
                            if !cells.iter().all(|&(n, k)| region.contains(spec, n, k)) {
                                continue;
                            }
                            assert!(tuple_constraints(n1, k1, k2, n2, l1, l2));
                            let lhs = [w.c(n1, k1), w.d(n1, k2), w.d(n2, l1), w.c(n2, l2)];
                            let rhs = [w.c(n1, k1 + 1), w.d(n1, k2 - 1), w.d(n2, l1 + 1), w.c(n2, l2 - 1)];
                            scan.le(
                                "(ii)",
                                vec![n1, k1, k2, n2, l1, l2],
                                "c(n1,k1)d(n1,k2)d(n2,l1)c(n2,l2) <= c(n1,k1+1)d(n1,k2-1)d(n2,l1+1)c(n2,l2-1)",
                                &lhs.iter().collect::<Vec<_>>(),
                                &rhs.iter().collect::<Vec<_>>(),
                            );
                        }
                    }
                }
            }
            scan
        })
        .collect();
    let mut all = Scan::new();
    for p in partials {
        all.checked += p.checked;
        all.found.extend(p.found);
    }
    all
}

/// Conditions (i), (ii), (iii) of the main sufficient condition.
pub fn check_main(spec: &RecurrenceSpec, max_n: i64, region: ScanRegion) -> ConditionReport {
    let w = &spec.weights;
    let mut scan = Scan::new();
    log_concave_in_k(&mut scan, spec, max_n, region, Side::C, "(i) c");
    log_concave_in_k(&mut scan, spec, max_n, region, Side::D, "(i) d");
    let ii = condition_ii(spec, max_n, region);
    scan.checked += ii.checked;
    scan.found.extend(ii.found);
    for (n, lo, hi) in region.rows(spec, max_n) {
        for k in lo..hi {
            let (d1, c0, d0, c1) = (w.d(n, k + 1), w.c(n, k), w.d(n, k), w.c(n, k + 1));
            scan.le("(iii)", vec![n, k], "d(n,k+1)c(n,k) <= d(n,k)c(n,k+1)", &[&d1, &c0], &[&d0, &c1]);
        }
    }
    let notes = vec![region.note(), "(iii) is quantified over every scanned row n".to_string()];
    ConditionReport::new("main", Some(max_n), scan.found, scan.checked, notes)
}

/// Closed-form parameter test for `c = (αn+βk+γ)^l`, `d = (α'n+β'k+γ')^l`; independent of `l`.
pub fn check_abc(p: &AffineParams) -> ConditionReport {
    let zero = BigRational::zero();
    let mut found = Vec::new();
    let mut fail = |clause: &str, inequality: &str, lhs: &BigRational, rhs: &BigRational| {
        if lhs > rhs {
            found.push(Witness {
                clause: clause.into(),
                at: vec![],
                inequality: inequality.into(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            });
        }
    };
    let neg = |v: &BigRational| -v;
    fail("1", "-alpha <= 0", &neg(&p.alpha), &zero);
    fail("1", "-alpha' <= 0", &neg(&p.alpha_d), &zero);
    fail("1", "-beta <= 0", &neg(&p.beta), &zero);
    fail("2", "-alpha' <= beta'", &neg(&p.alpha_d), &p.beta_d);
    fail("2", "beta' <= 0", &p.beta_d, &zero);
    fail("3", "-(alpha+beta+gamma) <= 0", &neg(&(&p.alpha + &p.beta + &p.gamma)), &zero);
    fail("3", "-(alpha'+beta'+gamma') <= 0", &neg(&(&p.alpha_d + &p.beta_d + &p.gamma_d)), &zero);
    let notes = vec![format!("parameters {p}")];
    ConditionReport::new("abc", None, found, 7, notes)
}

/// Direct check of `T(n,k)^2 >= T(n,k-1)T(n,k+1)` on every built row.
pub fn scan_log_concavity(spec: &RecurrenceSpec, max_n: i64) -> Result<ConditionReport, RecurrenceError> {
    let arr = build_array(spec, max_n)?;
    let mut scan = Scan::new();
    for n in spec.anchor.n..=max_n {
        let row = arr.row(n, RowView::Padded)?;
        let k0 = spec.anchor.k;
        for (i, win) in row.windows(3).enumerate() {
            let k = k0 + i as i64 + 1;
            scan.le_values("row", vec![n, k], "T(n,k-1)T(n,k+1) <= T(n,k)^2", &win[0] * &win[2], &win[1] * &win[1]);
        }
    }
    Ok(ConditionReport::new("scan", Some(max_n), scan.found, scan.checked, Vec::new()))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at: Vec<String> = self.at.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "{} at ({}): {} fails with {} > {}",
            self.clause,
            at.join(","),
            self.inequality,
            fmt_rational(&self.lhs),
            fmt_rational(&self.rhs)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{catalog_entries, catalog_lookup, Cell, CatalogParams, Weight};

    fn spec(c: Weight, d: Weight) -> RecurrenceSpec {
        RecurrenceSpec::new(WeightSpec::new(c, d), Cell::new(0, 0))
    }

    fn cat(name: &str, p: CatalogParams) -> RecurrenceSpec {
        catalog_lookup(name, &p).unwrap()
    }

    #[test]
    fn kurtz_examples() {
        let lin = spec(Weight::affine(0, 1, 0), Weight::constant(1));
        assert!(check_kurtz(&lin, 8, ScanRegion::Structural).holds());
        let sq = spec(Weight::affine(0, 1, 0).pow(2), Weight::constant(1));
        let r = check_kurtz(&sq, 8, ScanRegion::Structural);
        assert_eq!(r.verdict, Verdict::Fails);
        let w = &r.witnesses[0];
        let k = w.at[1];
        assert_eq!(w.lhs, rat(2 * k * k + 2));
        assert_eq!(w.rhs, rat(2 * k * k));
        assert!(check_kurtz(&cat("eulerian", CatalogParams::default()), 10, ScanRegion::Structural).holds());
    }

    #[test]
    fn sagan_examples() {
        let lin = spec(Weight::affine(0, 1, 0), Weight::constant(1));
        assert!(check_sagan(&lin, 8, ScanRegion::Structural).holds());
        assert!(check_sagan(&cat("lah", CatalogParams::default()), 8, ScanRegion::Structural).holds());
        let half = spec(Weight::Affine(crate::recurrence::AffinePower::new(rat(0), crate::algebra::ratio(1, 2), rat(0), 1)), Weight::constant(1));
        assert!(!check_sagan(&half, 5, ScanRegion::Structural).notes.is_empty());
    }

    #[test]
    fn main_examples() {
        assert!(check_main(&cat("stirling-subset", CatalogParams::default()), 6, ScanRegion::Structural).holds());
        assert!(check_main(&cat("lr-lah", CatalogParams::with_lr(2, 2)), 6, ScanRegion::Structural).holds());
        assert!(check_main(&cat("lr-lah-leader", CatalogParams::with_lr(2, 2)), 8, ScanRegion::Structural).holds());
        assert!(check_main(&cat("legendre-stirling", CatalogParams::default()), 6, ScanRegion::Structural).holds());
    }

    #[test]
    fn main_scans_tuples() {
        let r = check_main(&cat("lah", CatalogParams::default()), 6, ScanRegion::Structural);
        // brute-force count of tuples inside the widened region
        let s = cat("lah", CatalogParams::default());
        let mut expect = 0u64;
        for n1 in 1..=6 {
            for n2 in 1..=6 {
                for k1 in 0..=6 {
                    for k2 in 0..=6 {
                        for l1 in 0..=6 {
                            for l2 in 0..=6 {
                                let cells = [(n1, k1), (n1, k2), (n2, l1), (n2, l2), (n1, k1 + 1), (n1, k2 - 1), (n2, l1 + 1), (n2, l2 - 1)];
                                let weights_ok = [s.weights.c(n1, k1), s.weights.d(n1, k2), s.weights.d(n2, l1), s.weights.c(n2, l2), s.weights.c(n1, k1 + 1), s.weights.d(n1, k2 - 1), s.weights.d(n2, l1 + 1), s.weights.c(n2, l2 - 1)]
                                    .iter()
                                    .all(|v| *v >= BigRational::zero());
                                if tuple_constraints(n1, k1, k2, n2, l1, l2) && cells.iter().all(|&(n, k)| ScanRegion::Structural.contains(&s, n, k)) && weights_ok {
                                    expect += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(expect > 0);
        let ii = condition_ii(&s, 6, ScanRegion::Structural);
        assert_eq!(ii.checked, expect);
        assert!(r.holds());
    }

    #[test]
    fn abc_examples() {
        assert!(check_abc(&AffineParams::from_ints([1, 1, -1, 0, 0, 1])).holds());
        let bad = check_abc(&AffineParams::from_ints([0, -1, 5, 0, 0, 1]));
        assert_eq!(bad.verdict, Verdict::Fails);
        assert_eq!(bad.witnesses[0].clause, "1");
        assert!(check_abc(&AffineParams::from_ints([0, 1, 1, 2, -1, -1])).holds());
        assert!(!check_abc(&AffineParams::from_ints([0, 1, 1, 1, -2, 0])).holds());
    }

    #[test]
    fn scans() {
        for e in catalog_entries() {
            let s = cat(e.name, CatalogParams::default());
            assert!(scan_log_concavity(&s, s.anchor.n + 12).unwrap().holds(), "{}", e.name);
        }
        assert!(scan_log_concavity(&cat("lr-lah", CatalogParams::with_lr(3, 2)), 12).unwrap().holds());
        let signed = spec(Weight::affine(0, -1, 1), Weight::constant(1));
        assert!(scan_log_concavity(&signed, 5).is_err());
        let bumpy = spec(Weight::constant(1), Weight::custom("spike", |_, k| rat(if k == 2 { 11 } else { 1 })));
        assert!(!scan_log_concavity(&bumpy, 6).unwrap().holds());
    }

    #[test]
    fn abc_implies_main_on_catalog() {
        for e in catalog_entries() {
            for l in 1..=2 {
                let s = cat(e.name, CatalogParams::with_l(l));
                if let Some((p, _)) = s.weights.affine_params() {
                    if check_abc(&p).holds() {
                        let m = check_main(&s, s.anchor.n + 6, ScanRegion::Structural);
                        assert!(m.holds(), "{} l={l}: {:?}", e.name, m.witnesses.first());
                    }
                }
            }
        }
    }

    #[test]
    fn sagan_cross_for_affine_weights() {
        // for affine c, d the cross defect is exactly -2*beta*beta', so it holds iff the k-slopes agree in sign
        let mut opposite = 0;
        for e in catalog_entries() {
            let s = cat(e.name, CatalogParams::default());
            let Some((p, 1)) = s.weights.affine_params() else { continue };
            let r = check_sagan(&s, 8, ScanRegion::Structural);
            let cross_fails = r.witnesses.iter().any(|w| w.clause == "cross");
            let expect = &p.beta * &p.beta_d < BigRational::zero();
            assert_eq!(cross_fails, expect, "{}", e.name);
            for w in r.witnesses.iter().filter(|w| w.clause == "cross") {
                assert_eq!(&w.lhs - &w.rhs, rat(-2) * &p.beta * &p.beta_d);
            }
            if expect {
                opposite += 1;
                assert!(check_kurtz(&s, 8, ScanRegion::Structural).holds(), "{}", e.name);
            }
        }
        assert!(opposite >= 3);
    }

    #[test]
    fn extended_region_sees_outside_cells() {
        let s = cat("stirling-subset", CatalogParams::with_l(2));
        assert!(check_main(&s, 6, ScanRegion::Structural).holds());
        let ext = check_main(&s, 6, ScanRegion::Extended);
        assert!(!ext.holds());
        assert!(ext.witnesses.iter().all(|w| w.at.iter().skip(1).any(|&k| k <= 0) || w.clause != "(i) c"));
    }

    #[test]
    fn deterministic() {
        let s = spec(Weight::affine(0, 1, 0).pow(3), Weight::affine(1, -1, 0));
        let a = serde_json::to_string(&check_main(&s, 6, ScanRegion::Structural)).unwrap();
        let b = serde_json::to_string(&check_main(&s, 6, ScanRegion::Structural)).unwrap();
        assert_eq!(a, b);
    }
}
