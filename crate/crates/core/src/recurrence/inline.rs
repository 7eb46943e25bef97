//! Text syntax for weights.
//!
//! ```text
//! spec   := part (';' part)*          part := ('c' | 'd') '=' weight
//! weight := table | factor ('*' factor)*
//! table  := '[' rational (',' rational)* ']'
//! factor := affine | '(' affine ')' ('^' uint)? | atom '^' uint
//! affine := term (('+' | '-') term)*    term := rational? ('n' | 'k') | rational
//! ```

use num_traits::Zero;

use super::{AffinePower, RecurrenceError, Weight, WeightSpec};
use crate::algebra::{parse_rational, rat, BigRational};

fn err(expr: &str, reason: impl Into<String>) -> RecurrenceError {
    RecurrenceError::Parse { expr: expr.to_string(), reason: reason.into() }
}

/// Parses `c=EXPR;d=EXPR`. A missing `d` defaults to the constant 1.
pub fn parse_inline_spec(src: &str) -> Result<WeightSpec, RecurrenceError> {
    let mut c = None;
    let mut d = None;
    for part in src.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (lhs, rhs) = part.split_once('=').ok_or_else(|| err(part, "expected c=... or d=..."))?;
        let slot = match lhs.trim() {
            "c" => &mut c,
            "d" => &mut d,
            other => return Err(err(part, format!("unknown weight {other:?}"))),
        };
        if slot.is_some() {
            return Err(err(part, "weight given twice"));
        }
        *slot = Some(parse_weight(rhs)?);
    }
    let c = c.ok_or_else(|| err(src, "missing c=..."))?;
    Ok(WeightSpec::new(c, d.unwrap_or_else(|| Weight::constant(1))))
}

pub fn parse_weight(src: &str) -> Result<Weight, RecurrenceError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err(src, "empty expression"));
    }
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| err(src, "unclosed '['"))?;
        let vals = inner
            .split(',')
            .map(|t| parse_rational(t).map_err(|e| err(src, e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Weight::Table(vals));
    }
    let factors = split_top(&s, '*').map_err(|r| err(src, r))?;
    let mut out = Vec::with_capacity(factors.len());
    for f in factors {
        out.push(parse_factor(f).map_err(|r| err(src, r))?);
    }
    Ok(if out.len() == 1 { out.pop().unwrap() } else { Weight::Product(out) })
}

fn split_top(s: &str, sep: char) -> Result<Vec<&str>, String> {
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced ')'".into());
                }
            }
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced '('".into());
    }
    parts.push(&s[start..]);
    if parts.iter().any(|p| p.is_empty()) {
        return Err(format!("empty factor around '{sep}'"));
    }
    Ok(parts)
}

fn wrapped(s: &str) -> Option<&str> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    // "(a)+(b)" is not wrapped
    let mut depth = 0i32;
    for ch in inner.chars() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    Some(inner)
}

fn parse_factor(f: &str) -> Result<Weight, String> {
    let pieces = split_top(f, '^')?;
    let (base, exp) = match pieces.as_slice() {
        [b] => (*b, 1u32),
        [b, e] => {
            let e: u32 = e.parse().map_err(|_| format!("bad exponent {e:?}"))?;
            if e == 0 {
                return Err("exponent must be positive".into());
            }
            (*b, e)
        }
        _ => return Err(format!("chained '^' in {f:?}")),
    };
    let (body, parens) = match wrapped(base) {
        Some(inner) => (inner, true),
        None => (base, false),
    };
    if body.contains('(') {
        return Err(format!("nested parentheses in {f:?}"));
    }
    let a = parse_affine(body)?;
    let terms = [&a.alpha, &a.beta, &a.gamma].iter().filter(|c| !c.is_zero()).count();
    if exp > 1 && !parens && (terms > 1 || body.starts_with('-')) {
        return Err(format!("'^' applied to an unparenthesized sum {body:?}"));
    }
    Ok(Weight::Affine(AffinePower { l: exp, ..a }))
}

fn parse_affine(s: &str) -> Result<AffinePower, String> {
    let mut coefs = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
    let mut rest = s;
    let mut first = true;
    while !rest.is_empty() {
        let neg = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                false
            }
            b'-' => {
                rest = &rest[1..];
                true
            }
            _ if first => false,
            _ => return Err(format!("expected '+' or '-' in {s:?}")),
        };
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        if term.is_empty() {
            return Err(format!("dangling sign in {s:?}"));
        }
        let (num, slot) = match term.chars().last() {
            Some('n') => (&term[..term.len() - 1], 0),
            Some('k') => (&term[..term.len() - 1], 1),
            _ => (term, 2),
        };
        let mut v = if num.is_empty() {
            rat(1)
        } else {
            parse_rational(num).map_err(|_| format!("bad term {term:?}"))?
        };
        if neg {
            v = -v;
        }
        coefs[slot] += v;
    }
    let [alpha, beta, gamma] = coefs;
    Ok(AffinePower::new(alpha, beta, gamma, 1))
}
