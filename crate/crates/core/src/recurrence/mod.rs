//! Triangular arrays defined by `T(n,k) = c(n,k) T(n-1,k) + d(n,k) T(n-1,k-1)`.

mod array;
mod catalog;
mod inline;
mod weight;

pub use array::{build_array, RecurrenceSpec, RowView, TriangularArray};
pub use catalog::{catalog_entries, catalog_lookup, power_lift, CatalogEntry, CatalogParams};
pub use inline::{parse_inline_spec, parse_weight};
pub use weight::{AffineParams, AffinePower, Weight, WeightFn, WeightSpec};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// A lattice cell: row `n`, column `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub n: i64,
    pub k: i64,
}

impl Cell {
    pub const fn new(n: i64, k: i64) -> Self {
        Self { n, k }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={})", self.n, self.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("weight {which}({n},{k}) = {value} is negative at a visited cell")]
    NegativeWeight { which: char, n: i64, k: i64, value: String },
    #[error("max_n = {max_n} is below the anchor row {n0}")]
    BadRange { max_n: i64, n0: i64 },
    #[error("row {0} has not been built")]
    RowNotBuilt(i64),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("cannot parse weight expression {expr:?}: {reason}")]
    Parse { expr: String, reason: String },
}
