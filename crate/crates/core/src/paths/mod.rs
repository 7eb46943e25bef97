//! Weighted N/C lattice paths, the suffix-swap injection and its 2-Motzkin encoding.
//!
//! Cells are `(n, k)` with `n` the row (height) and `k` the column. `N` moves
//! `(n,k) -> (n+1,k)`, `C` moves `(n,k) -> (n+1,k+1)`.

mod injection;
mod verify;
mod word;

pub use injection::{injection, match_up_down, motzkin_encode, motzkin_step_weights, Injected, MotzkinStep, MotzkinWord};
pub use verify::{sweep_injection, verify_weight_monotone, ColumnSweep, InjectionSweep, MonotoneReport, PairViolation, SweepOptions};
pub use word::{enumerate_paths, path_count, path_sum, path_weight, PathWord, Step};

use thiserror::Error;

use crate::recurrence::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("{to} is not reachable from {from}")]
    Unreachable { from: Cell, to: Cell },
    #[error("paths must share a start and end two columns apart in one row: {p} vs {q}")]
    BadEndpoints { p: Cell, q: Cell },
    #[error("no split index exists")]
    NoSplit,
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("cannot parse path {0:?}")]
    Parse(String),
    #[error("span {span} exceeds the enumeration cap {cap}")]
    TooLarge { span: i64, cap: i64 },
}
