use std::ops::Mul;

/// `true` iff `a_k^2 >= a_{k-1} a_{k+1}` at every interior index.
///
/// Sequences of length one or two are trivially log-concave. An empty
/// slice is a caller error; it is accepted and reported as log-concave.
pub fn is_log_concave<T>(seq: &[T]) -> bool
where
    T: Ord,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Interior indices `k` where `a_k^2 < a_{k-1} a_{k+1}`.
pub fn log_concavity_violations<T>(seq: &[T]) -> Vec<usize>
where
    T: Ord,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    seq.windows(3)
        .enumerate()
        .filter(|(_, w)| &w[1] * &w[1] < &w[0] * &w[2])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Weakly increasing up to some peak, weakly decreasing afterwards.
pub fn is_unimodal<T: Ord>(seq: &[T]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}
