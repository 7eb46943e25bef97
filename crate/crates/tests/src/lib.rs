//! Brute-force oracles written without the library's enumeration code.
//!
//! Sets of small positive integers are `u32` bitmasks, bit `i-1` for `i`.

use std::collections::HashMap;

use trirec::algebra::{BigInt, BigRational};

pub fn mask(elems: impl IntoIterator<Item = usize>) -> u32 {
    elems.into_iter().fold(0, |m, i| m | 1 << (i - 1))
}

pub fn prefix_mask(r: usize) -> u32 {
    mask(1..=r)
}

pub fn binom(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Functions `f` on `[n]` with `1 <= f(i) <= i`.
pub fn subexceedant(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (1..=i).map(move |v| {
                    let mut g = f.clone();
                    g.push(v);
                    g
                })
            })
            .collect();
    }
    out
}

/// Set partitions of `[n]` as lists of blocks, each block increasing.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for x in 1..=n {
        let mut next = Vec::new();
        for p in out {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(x);
                next.push(q);
            }
            let mut q = p;
            q.push(vec![x]);
            next.push(q);
        }
        out = next;
    }
    out
}

pub fn descents(p: &[usize]) -> usize {
    (1..p.len()).filter(|&i| p[i - 1] > p[i]).count()
}

/// First letters of the maximal increasing runs.
pub fn run_leaders(p: &[usize]) -> u32 {
    mask((0..p.len()).filter(|&i| i == 0 || p[i - 1] > p[i]).map(|i| p[i]))
}

/// Indices `i` where `f(i)` takes a value not seen before.
pub fn first_occurrences(f: &[usize]) -> u32 {
    let mut seen = 0u32;
    let mut out = 0u32;
    for (i, &v) in f.iter().enumerate() {
        if seen & 1 << (v - 1) == 0 {
            seen |= 1 << (v - 1);
            out |= 1 << i;
        }
    }
    out
}

pub fn image(f: &[usize], s: u32) -> u32 {
    mask((1..=f.len()).filter(|i| s & 1 << (i - 1) != 0).map(|i| f[i - 1]))
}

pub fn cycle_minima(p: &[usize]) -> u32 {
    let mut out = 0;
    for start in 1..=p.len() {
        let mut j = p[start - 1];
        let mut min = start;
        while j != start {
            min = min.min(j);
            j = p[j - 1];
        }
        if min == start {
            out |= 1 << (start - 1);
        }
    }
    out
}

/// `sum cnt(S)^l` over leader sets `S` with `|S| = size` and `[r] ⊆ S`.
pub fn tuple_count(census: &HashMap<u32, u128>, size: usize, l: u32, r: usize) -> u128 {
    let need = prefix_mask(r);
    census
        .iter()
        .filter(|(s, _)| s.count_ones() as usize == size && *s & need == need)
        .map(|(_, c)| c.pow(l))
        .sum()
}

/// Leader-set census of set partitions by block minima; `lah` weights each by the block orderings.
pub fn partition_census(n: usize, lah: bool) -> HashMap<u32, u128> {
    let mut m = HashMap::new();
    for p in set_partitions(n) {
        let w: u128 = if lah { p.iter().map(|b| factorial(b.len())).product() } else { 1 };
        *m.entry(mask(p.iter().map(|b| b[0]))).or_default() += w;
    }
    m
}

pub fn cycle_census(n: usize) -> HashMap<u32, u128> {
    let mut m = HashMap::new();
    for p in permutations(n) {
        *m.entry(cycle_minima(&p)).or_default() += 1;
    }
    m
}

pub fn subexceedant_census(n: usize) -> HashMap<u32, u128> {
    let mut m = HashMap::new();
    for f in subexceedant(n) {
        *m.entry(first_occurrences(&f)).or_default() += 1;
    }
    m
}

/// Set partitions of `[n]` into `k` blocks with `1..=r` in distinct blocks.
pub fn r_stirling2(n: usize, k: usize, r: usize) -> u128 {
    let need = prefix_mask(r);
    set_partitions(n)
        .iter()
        .filter(|p| p.len() == k && mask(p.iter().map(|b| b[0])) & need == need)
        .count() as u128
}

/// Permutations of `[n]` with `k` descents and `[r] ⊆` run leaders.
pub fn r_eulerian_permutations(n: usize, k: usize, r: usize) -> u128 {
    let need = prefix_mask(r);
    permutations(n)
        .iter()
        .filter(|p| descents(p) == k && run_leaders(p) & need == need)
        .count() as u128
}

/// Subexceedant functions on `[n]` with `k + 1` first occurrences including `[r]`.
pub fn r_eulerian_subexceedant(n: usize, k: usize, r: usize) -> u128 {
    let need = prefix_mask(r);
    subexceedant(n)
        .iter()
        .filter(|f| {
            let b = first_occurrences(f);
            b.count_ones() as usize == k + 1 && b & need == need
        })
        .count() as u128
}

/// Words over `{N, C}` of length `len`, `true` for `C`.
pub fn words(len: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << len).map(move |bits| (0..len).map(|j| bits >> (len - 1 - j) & 1 == 1).collect())
}

pub fn cross_prefix(w: &[bool], i: usize) -> i64 {
    w[..i].iter().filter(|&&c| c).count() as i64
}

pub fn word_string(w: &[bool]) -> String {
    w.iter().map(|&c| if c { 'C' } else { 'N' }).collect()
}

/// Largest `i` with `C_p(i) - C_q(i) = 1`, then the suffixes after `i` are exchanged.
pub fn swap_suffixes(p: &[bool], q: &[bool]) -> Option<(Vec<bool>, Vec<bool>, usize)> {
    let i = (1..=p.len()).rev().find(|&i| cross_prefix(p, i) - cross_prefix(q, i) == 1)?;
    let p2 = [&p[..i], &q[i..]].concat();
    let q2 = [&q[..i], &p[i..]].concat();
    Some((p2, q2, i))
}

/// Sum over all words from `anchor` of the step-weight products, by end column.
/// A north step into `(n,k)` weighs `c(n,k)`, a cross step `d(n,k)`.
pub fn path_sums(
    anchor: (i64, i64),
    span: usize,
    c: impl Fn(i64, i64) -> BigRational,
    d: impl Fn(i64, i64) -> BigRational,
) -> HashMap<i64, BigRational> {
    let mut out: HashMap<i64, BigRational> = HashMap::new();
    for w in words(span) {
        let (mut n, mut k) = anchor;
        let mut prod = BigRational::from_integer(BigInt::from(1));
        for &cross in &w {
            n += 1;
            if cross {
                k += 1;
                prod *= d(n, k);
            } else {
                prod *= c(n, k);
            }
        }
        *out.entry(k).or_insert_with(|| BigRational::from_integer(BigInt::from(0))) += prod;
    }
    out
}

/// Sign changes of `p` at `x_j = -(9/8)^j`, `j = -bound..=bound`; a lower bound on negative real roots.
pub fn negative_sign_changes(coeffs: &[BigInt], bound: i32) -> usize {
    let q = BigRational::new(BigInt::from(9), BigInt::from(8));
    let zero = BigRational::from_integer(BigInt::from(0));
    let mut signs = Vec::new();
    for j in -bound..=bound {
        let mag = if j >= 0 { num_pow(&q, j as u32) } else { num_pow(&q.recip(), (-j) as u32) };
        let x = -mag;
        let v = coeffs
            .iter()
            .rev()
            .fold(zero.clone(), |acc, c| acc * &x + BigRational::from_integer(c.clone()));
        if v != zero {
            signs.push(v > zero);
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn num_pow(x: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::from_integer(BigInt::from(1)), |acc, _| acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(permutations(5).len(), 120);
        assert_eq!(subexceedant(5).len(), 120);
        assert_eq!(set_partitions(6).len(), 203);
        assert_eq!(binom(10, 3), 120);
        assert_eq!(r_stirling2(5, 3, 1), 25);
        assert_eq!(r_eulerian_permutations(4, 1, 1), 11);
    }

    #[test]
    fn leaders() {
        assert_eq!(run_leaders(&[2, 8, 7, 4, 1, 3, 6, 5]), mask([1, 2, 4, 5, 7]));
        assert_eq!(first_occurrences(&[1, 2, 1, 2, 1, 5, 4, 7]), mask([1, 2, 6, 7, 8]));
        assert_eq!(cycle_minima(&[2, 1, 3]), mask([1, 3]));
    }

    #[test]
    fn swap_example() {
        let w = |s: &str| s.chars().map(|c| c == 'C').collect::<Vec<_>>();
        let (p2, q2, i) = swap_suffixes(&w("NCCCNN"), &w("NNCNNN")).unwrap();
        assert_eq!((word_string(&p2).as_str(), word_string(&q2).as_str(), i), ("NCCNNN", "NNCCNN", 3));
    }

    #[test]
    fn eulerian_roots_by_sign_changes() {
        let c: Vec<BigInt> = [1, 11, 11, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(negative_sign_changes(&c, 40), 3);
    }
}
