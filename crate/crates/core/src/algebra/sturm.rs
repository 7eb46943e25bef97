use super::{sign, AlgebraError, Polynomial};

/// Signed remainder chain `p, p', -rem(p, p'), ...` ending at the last non-zero term.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = Vec::new();
    if p.is_zero() {
        return chain;
    }
    chain.push(p.clone());
    let mut prev = p.clone();
    let mut cur = p.derivative();
    while !cur.is_zero() {
        let next = -&prev.rem(&cur);
        chain.push(cur.clone());
        prev = cur;
        cur = next;
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_at_infinity(p: &Polynomial, negative: bool) -> i8 {
    let s = sign(p.leading().expect("chain members are non-zero"));
    let odd = p.degree().unwrap_or(0) % 2 == 1;
    if negative && odd {
        -s
    } else {
        s
    }
}

/// Number of distinct real roots, from the Sturm chain evaluated at `±∞`.
pub fn count_real_roots(p: &Polynomial) -> Result<usize, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let chain = sturm_chain(p);
    let at_neg = sign_changes(chain.iter().map(|q| sign_at_infinity(q, true)));
    let at_pos = sign_changes(chain.iter().map(|q| sign_at_infinity(q, false)));
    Ok(at_neg - at_pos)
}

/// `p / gcd(p, p')`: same roots as `p`, each with multiplicity one.
pub fn squarefree_part(p: &Polynomial) -> Polynomial {
    if p.degree().unwrap_or(0) == 0 {
        return p.clone();
    }
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0
}

/// All complex roots (with multiplicity) are real.
///
/// The largest power of `x` is divided out first; non-zero constants are
/// vacuously real-rooted.
pub fn is_real_rooted(p: &Polynomial) -> Result<bool, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let (_, q) = p.strip_x_power();
    let sf = squarefree_part(&q);
    let distinct = sf.degree().unwrap_or(0);
    Ok(count_real_roots(&q)? == distinct)
}
