use num_traits::{One, Zero};
use serde::Serialize;

use super::{Cell, RecurrenceError, WeightSpec};
use crate::algebra::{fmt_rational, BigRational};
use crate::serde_support::rational_rows;

/// Weights plus the anchor cell `(n0, k0)` where `T = 1`.
///
/// `T(n,k)` vanishes outside `n >= n0, k0 <= k <= k0 + (n - n0)`.
#[derive(Debug, Clone)]
pub struct RecurrenceSpec {
    pub weights: WeightSpec,
    pub anchor: Cell,
}

impl RecurrenceSpec {
    pub fn new(weights: WeightSpec, anchor: Cell) -> Self {
        Self { weights, anchor }
    }

    /// Column range `[k0, k0 + (n - n0)]` of row `n`; empty (lo > hi) above the anchor.
    pub fn k_range(&self, n: i64) -> (i64, i64) {
        (self.anchor.k, self.anchor.k + (n - self.anchor.n))
    }

    pub fn in_triangle(&self, n: i64, k: i64) -> bool {
        let (lo, hi) = self.k_range(n);
        n >= self.anchor.n && lo <= k && k <= hi
    }

    pub fn description(&self) -> String {
        format!(
            "{}, anchor (n0,k0) = ({},{})",
            self.weights.description, self.anchor.n, self.anchor.k
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowView {
    /// Every structural cell `k0..=k0+(n-n0)`, zeros included.
    Padded,
    /// Leading and trailing zeros dropped.
    Trimmed,
}

/// Rows `n0..=max_n` of an exactly computed triangular array.
#[derive(Debug, Clone, Serialize)]
pub struct TriangularArray {
    #[serde(skip)]
    spec: RecurrenceSpec,
    anchor: Cell,
    #[serde(serialize_with = "rational_rows")]
    rows: Vec<Vec<BigRational>>,
}

/// Builds rows `n0..=max_n`.
///
/// A weight is evaluated only where it multiplies a cell of the previous
/// row that lies inside the triangle; a negative value there aborts the build.
pub fn build_array(spec: &RecurrenceSpec, max_n: i64) -> Result<TriangularArray, RecurrenceError> {
    let Cell { n: n0, .. } = spec.anchor;
    if max_n < n0 {
        return Err(RecurrenceError::BadRange { max_n, n0 });
    }
    let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for n in n0 + 1..=max_n {
        let prev = rows.last().unwrap();
        let (lo, hi) = spec.k_range(n);
        let mut row = Vec::with_capacity((hi - lo + 1) as usize);
        for k in lo..=hi {
            let idx = (k - lo) as usize;
            let mut v = BigRational::zero();
            if let Some(up) = prev.get(idx) {
                let c = checked(spec, 'c', n, k)?;
                v += c * up;
            }
            if idx >= 1 {
                let d = checked(spec, 'd', n, k)?;
                v += d * &prev[idx - 1];
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(TriangularArray { spec: spec.clone(), anchor: spec.anchor, rows })
}

fn checked(spec: &RecurrenceSpec, which: char, n: i64, k: i64) -> Result<BigRational, RecurrenceError> {
    let v = if which == 'c' { spec.weights.c(n, k) } else { spec.weights.d(n, k) };
    if v < BigRational::zero() {
        return Err(RecurrenceError::NegativeWeight { which, n, k, value: fmt_rational(&v) });
    }
    Ok(v)
}

impl TriangularArray {
    pub fn spec(&self) -> &RecurrenceSpec {
        &self.spec
    }

    pub fn anchor(&self) -> Cell {
        self.anchor
    }

    pub fn max_n(&self) -> i64 {
        self.anchor.n + self.rows.len() as i64 - 1
    }

    /// `T(n,k)`, zero outside the triangle. Panics if `n` is above `max_n`.
    pub fn get(&self, n: i64, k: i64) -> BigRational {
        assert!(n <= self.max_n(), "row {n} not built");
        if !self.spec.in_triangle(n, k) {
            return BigRational::zero();
        }
        self.rows[(n - self.anchor.n) as usize][(k - self.anchor.k) as usize].clone()
    }

    /// Structural cells of row `n`.
    pub fn row(&self, n: i64, view: RowView) -> Result<Vec<BigRational>, RecurrenceError> {
        if n < self.anchor.n || n > self.max_n() {
            return Err(RecurrenceError::RowNotBuilt(n));
        }
        let row = &self.rows[(n - self.anchor.n) as usize];
        Ok(match view {
            RowView::Padded => row.clone(),
            RowView::Trimmed => {
                let start = row.iter().position(|v| !v.is_zero());
                match start {
                    None => Vec::new(),
                    Some(s) => {
                        let end = row.iter().rposition(|v| !v.is_zero()).unwrap();
                        row[s..=end].to_vec()
                    }
                }
            }
        })
    }

    /// Padded rows in order `n0..=max_n`.
    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// Re-verifies every entry against the previous row; returns the first bad cell.
    pub fn recheck(&self) -> Result<(), Cell> {
        let w = &self.spec.weights;
        for n in self.anchor.n + 1..=self.max_n() {
            let (lo, hi) = self.spec.k_range(n);
            for k in lo..=hi {
                let up = self.get(n - 1, k);
                let diag = self.get(n - 1, k - 1);
                let mut expect = BigRational::zero();
                if !up.is_zero() {
                    expect += w.c(n, k) * up;
                }
                if !diag.is_zero() {
                    expect += w.d(n, k) * diag;
                }
                if self.get(n, k) != expect {
                    return Err(Cell::new(n, k));
                }
            }
        }
        Ok(())
    }
}
