use super::{LeaderSet, Permutation, SubexceedantFunction};

/// Builds the permutation letter by letter:
/// `f(i) = i` puts `i` first; `f(i)` already in the image puts `i` at the end of the
/// increasing run starting at `f(i)`; otherwise `i` goes immediately left of `f(i)`.
pub fn lambda_map(f: &SubexceedantFunction) -> Permutation {
    let mut pi: Vec<usize> = Vec::with_capacity(f.len());
    let mut seen = LeaderSet::default();
    for (idx, &v) in f.values().iter().enumerate() {
        let i = idx + 1;
        if v == i {
            pi.insert(0, i);
        } else {
            let mut j = pi.iter().position(|&x| x == v).expect("f(i) < i is already placed");
            if seen.contains(v) {
                while j + 1 < pi.len() && pi[j + 1] > pi[j] {
                    j += 1;
                }
                j += 1;
            }
            pi.insert(j, i);
        }
        seen.insert(v);
    }
    Permutation::new_unchecked(pi)
}

/// Reads `f(i)` off `π` restricted to letters `<= i`.
pub fn lambda_inverse(p: &Permutation) -> SubexceedantFunction {
    let n = p.len();
    let mut f = Vec::with_capacity(n);
    let mut image = LeaderSet::default();
    for i in 1..=n {
        let restricted: Vec<usize> = p.one_line().iter().copied().filter(|&x| x <= i).collect();
        let pos = restricted.iter().position(|&x| x == i).unwrap();
        let v = if pos == 0 {
            i
        } else if pos + 1 < restricted.len() && !image.contains(restricted[pos + 1]) {
            restricted[pos + 1]
        } else {
            *restricted[..pos].iter().rev().find(|&&x| image.contains(x)).expect("an image letter lies left of i")
        };
        image.insert(v);
        f.push(v);
    }
    SubexceedantFunction(f)
}
