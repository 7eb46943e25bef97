use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::PathError;
use crate::algebra::{binomial, BigInt, BigRational};
use crate::recurrence::{Cell, WeightSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    C,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::C => 'C',
        }
    }
}

/// A start cell and a word over `{N, C}`. The endpoint is derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    pub start: Cell,
    pub steps: Vec<Step>,
}

impl PathWord {
    pub fn new(start: Cell, steps: Vec<Step>) -> Self {
        Self { start, steps }
    }

    pub fn parse(start: Cell, word: &str) -> Result<Self, PathError> {
        let steps = word
            .chars()
            .map(|ch| match ch {
                'N' | 'n' => Ok(Step::N),
                'C' | 'c' => Ok(Step::C),
                _ => Err(PathError::Parse(word.to_string())),
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { start, steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of `C` steps among the first `i`.
    pub fn cross_count(&self, i: usize) -> i64 {
        self.steps[..i].iter().filter(|&&s| s == Step::C).count() as i64
    }

    pub fn end(&self) -> Cell {
        self.cell_after(self.len())
    }

    /// The cell reached after the first `i` steps.
    pub fn cell_after(&self, i: usize) -> Cell {
        Cell::new(self.start.n + i as i64, self.start.k + self.cross_count(i))
    }

    /// Cells after each step, in order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cur = self.start;
        self.steps
            .iter()
            .map(|s| {
                cur = Cell::new(cur.n + 1, cur.k + i64::from(*s == Step::C));
                cur
            })
            .collect()
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", self.word())
        }
    }
}

impl FromStr for Step {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "N" => Ok(Step::N),
            "C" => Ok(Step::C),
            _ => Err(PathError::Parse(s.to_string())),
        }
    }
}

impl Serialize for PathWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.word())
    }
}

fn span(start: Cell, end: Cell) -> Result<(usize, usize), PathError> {
    let dn = end.n - start.n;
    let dk = end.k - start.k;
    if dk < 0 || dn < dk {
        return Err(PathError::Unreachable { from: start, to: end });
    }
    Ok((dn as usize, dk as usize))
}

/// `C(dn, dk)`, the number of paths between two cells.
pub fn path_count(start: Cell, end: Cell) -> Result<BigInt, PathError> {
    let (dn, dk) = span(start, end)?;
    Ok(binomial(dn as u64, dk as u64))
}

/// All paths from `start` to `end` in lexicographic order with `N < C`.
pub fn enumerate_paths(start: Cell, end: Cell) -> Result<Vec<PathWord>, PathError> {
    let (dn, dk) = span(start, end)?;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(dn);
    fill(dn, dk, &mut buf, &mut |w| out.push(PathWord::new(start, w.to_vec())));
    Ok(out)
}

fn fill(len: usize, crosses: usize, buf: &mut Vec<Step>, emit: &mut impl FnMut(&[Step])) {
    if buf.len() == len {
        emit(buf);
        return;
    }
    let used = buf.iter().filter(|&&s| s == Step::C).count();
    let left = len - buf.len();
    if crosses - used < left {
        buf.push(Step::N);
        fill(len, crosses, buf, emit);
        buf.pop();
    }
    if used < crosses {
        buf.push(Step::C);
        fill(len, crosses, buf, emit);
        buf.pop();
    }
}

/// Weight of the step that ends at `cell`.
pub(crate) fn step_weight(step: Step, cell: Cell, w: &WeightSpec) -> BigRational {
    match step {
        Step::N => w.c(cell.n, cell.k),
        Step::C => w.d(cell.n, cell.k),
    }
}

/// Product of step weights; 1 for the empty path.
pub fn path_weight(p: &PathWord, w: &WeightSpec) -> BigRational {
    p.steps
        .iter()
        .zip(p.cells())
        .fold(BigRational::one(), |acc, (&s, cell)| acc * step_weight(s, cell, w))
}

/// Sum of `path_weight` over every path from `anchor` to `end`.
pub fn path_sum(end: Cell, w: &WeightSpec, anchor: Cell) -> Result<BigRational, PathError> {
    let (dn, dk) = span(anchor, end)?;
    let mut total = BigRational::zero();
    let mut buf = Vec::with_capacity(dn);
    fill(dn, dk, &mut buf, &mut |steps| {
        total += path_weight(&PathWord::new(anchor, steps.to_vec()), w);
    });
    Ok(total)
}
