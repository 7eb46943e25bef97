use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{fmt_rational, rat, BigRational};
use crate::serde_support::rational;

/// `(alpha*n + beta*k + gamma)^l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AffinePower {
    #[serde(serialize_with = "rational")]
    pub alpha: BigRational,
    #[serde(serialize_with = "rational")]
    pub beta: BigRational,
    #[serde(serialize_with = "rational")]
    pub gamma: BigRational,
    pub l: u32,
}

impl AffinePower {
    pub fn new(alpha: BigRational, beta: BigRational, gamma: BigRational, l: u32) -> Self {
        Self { alpha, beta, gamma, l }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(rat(alpha), rat(beta), rat(gamma), 1)
    }

    /// The affine base before the power is taken.
    pub fn base(&self, n: i64, k: i64) -> BigRational {
        &self.alpha * rat(n) + &self.beta * rat(k) + &self.gamma
    }

    pub fn eval(&self, n: i64, k: i64) -> BigRational {
        num_traits::pow(self.base(n, k), self.l as usize)
    }

    fn affine_string(&self) -> String {
        let mut out = String::new();
        for (coef, var) in [(&self.alpha, "n"), (&self.beta, "k"), (&self.gamma, "")] {
            if coef.is_zero() {
                continue;
            }
            let neg = coef < &BigRational::zero();
            let mag = fmt_rational(&if neg { -coef } else { coef.clone() });
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if var.is_empty() || mag != "1" {
                out.push_str(&mag);
            }
            out.push_str(var);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn is_single_token(&self) -> bool {
        let nonzero = [&self.alpha, &self.beta, &self.gamma]
            .iter()
            .filter(|c| !c.is_zero())
            .count();
        nonzero <= 1 && self.gamma >= BigRational::zero() && self.alpha >= BigRational::zero() && self.beta >= BigRational::zero()
    }
}

impl fmt::Display for AffinePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.affine_string();
        match self.l {
            1 => write!(f, "{s}"),
            l if self.is_single_token() => write!(f, "{s}^{l}"),
            l => write!(f, "({s})^{l}"),
        }
    }
}

/// Closure-backed weight for coefficients that are not affine powers.
pub type WeightFn = Arc<dyn Fn(i64, i64) -> BigRational + Send + Sync>;

/// A coefficient function `(n, k) -> BigRational` for one side of a triangular recurrence.
#[derive(Clone)]
pub enum Weight {
    Affine(AffinePower),
    Product(Vec<Weight>),
    Power(Box<Weight>, u32),
    /// Values indexed by `k`; indices outside the list clamp to the nearest end.
    Table(Vec<BigRational>),
    Custom { f: WeightFn, description: String },
}

impl Weight {
    pub fn affine(alpha: i64, beta: i64, gamma: i64) -> Self {
        Weight::Affine(AffinePower::from_ints(alpha, beta, gamma))
    }

    pub fn constant(c: i64) -> Self {
        Self::affine(0, 0, c)
    }

    pub fn custom(description: impl Into<String>, f: impl Fn(i64, i64) -> BigRational + Send + Sync + 'static) -> Self {
        Weight::Custom { f: Arc::new(f), description: description.into() }
    }

    pub fn eval(&self, n: i64, k: i64) -> BigRational {
        match self {
            Weight::Affine(a) => a.eval(n, k),
            Weight::Product(fs) => fs.iter().fold(BigRational::one(), |acc, w| acc * w.eval(n, k)),
            Weight::Power(w, l) => num_traits::pow(w.eval(n, k), *l as usize),
            Weight::Table(v) => {
                if v.is_empty() {
                    return BigRational::zero();
                }
                let i = k.clamp(0, v.len() as i64 - 1) as usize;
                v[i].clone()
            }
            Weight::Custom { f, .. } => f(n, k),
        }
    }

    /// `self^l` with the exponent folded into affine factors where possible.
    pub fn pow(&self, l: u32) -> Weight {
        match self {
            _ if l == 1 => self.clone(),
            Weight::Affine(a) => Weight::Affine(AffinePower { l: a.l * l, ..a.clone() }),
            Weight::Product(fs) => Weight::Product(fs.iter().map(|w| w.pow(l)).collect()),
            Weight::Power(w, e) => Weight::Power(w.clone(), e * l),
            other => Weight::Power(Box::new(other.clone()), l),
        }
    }

    pub fn as_affine(&self) -> Option<&AffinePower> {
        match self {
            Weight::Affine(a) => Some(a),
            _ => None,
        }
    }

    /// Every value this weight takes is an integer on `[n_lo, n_hi] x [k_lo, k_hi]`.
    pub fn is_integral_on(&self, n_lo: i64, n_hi: i64, k_lo: i64, k_hi: i64) -> bool {
        (n_lo..=n_hi).all(|n| (k_lo..=k_hi).all(|k| self.eval(n, k).is_integer()))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Affine(a) => write!(f, "{a}"),
            Weight::Product(fs) => {
                let parts: Vec<String> = fs
                    .iter()
                    .map(|w| match w {
                        Weight::Affine(a) if a.l == 1 && !a.is_single_token() => format!("({w})"),
                        _ => w.to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join("*"))
            }
            Weight::Power(w, l) => write!(f, "({w})^{l}"),
            Weight::Table(v) => {
                let parts: Vec<String> = v.iter().map(fmt_rational).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Weight::Custom { description, .. } => write!(f, "{description}"),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

/// The six affine parameters `(alpha, beta, gamma; alpha', beta', gamma')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineParams {
    #[serde(serialize_with = "rational")]
    pub alpha: BigRational,
    #[serde(serialize_with = "rational")]
    pub beta: BigRational,
    #[serde(serialize_with = "rational")]
    pub gamma: BigRational,
    #[serde(serialize_with = "rational")]
    pub alpha_d: BigRational,
    #[serde(serialize_with = "rational")]
    pub beta_d: BigRational,
    #[serde(serialize_with = "rational")]
    pub gamma_d: BigRational,
}

impl AffineParams {
    pub fn from_ints(p: [i64; 6]) -> Self {
        let [a, b, g, a2, b2, g2] = p.map(rat);
        Self { alpha: a, beta: b, gamma: g, alpha_d: a2, beta_d: b2, gamma_d: g2 }
    }
}

impl fmt::Display for AffineParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = [&self.alpha, &self.beta, &self.gamma, &self.alpha_d, &self.beta_d, &self.gamma_d].map(fmt_rational);
        write!(f, "({},{},{};{},{},{})", p[0], p[1], p[2], p[3], p[4], p[5])
    }
}

/// The pair of coefficient functions `c` (north steps) and `d` (cross steps).
#[derive(Debug, Clone)]
pub struct WeightSpec {
    pub c: Weight,
    pub d: Weight,
    pub description: String,
}

impl WeightSpec {
    pub fn new(c: Weight, d: Weight) -> Self {
        let description = format!("c(n,k) = {c}, d(n,k) = {d}");
        Self { c, d, description }
    }

    pub fn affine(p: [i64; 6], l: u32) -> Self {
        let c = Weight::affine(p[0], p[1], p[2]).pow(l);
        let d = Weight::affine(p[3], p[4], p[5]).pow(l);
        Self::new(c, d)
    }

    pub fn c(&self, n: i64, k: i64) -> BigRational {
        self.c.eval(n, k)
    }

    pub fn d(&self, n: i64, k: i64) -> BigRational {
        self.d.eval(n, k)
    }

    /// `Some((params, l))` when both sides are affine powers with a common exponent.
    pub fn affine_params(&self) -> Option<(AffineParams, u32)> {
        let (c, d) = (self.c.as_affine()?, self.d.as_affine()?);
        if c.l != d.l {
            return None;
        }
        Some((
            AffineParams {
                alpha: c.alpha.clone(),
                beta: c.beta.clone(),
                gamma: c.gamma.clone(),
                alpha_d: d.alpha.clone(),
                beta_d: d.beta.clone(),
                gamma_d: d.gamma.clone(),
            },
            c.l,
        ))
    }

    /// Both weights raised to the `l`-th power.
    pub fn pow(&self, l: u32) -> Self {
        Self::new(self.c.pow(l), self.d.pow(l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_display() {
        assert_eq!(Weight::affine(1, 1, -1).to_string(), "n+k-1");
        assert_eq!(Weight::affine(0, 1, 0).pow(2).to_string(), "k^2");
        assert_eq!(Weight::affine(1, 1, 1).pow(3).to_string(), "(n+k+1)^3");
        assert_eq!(Weight::affine(2, -1, -1).to_string(), "2n-k-1");
        assert_eq!(Weight::affine(0, 0, 0).to_string(), "0");
        assert_eq!(Weight::affine(0, -1, 0).pow(2).to_string(), "(-k)^2");
    }

    #[test]
    fn evaluation() {
        let w = Weight::affine(1, 1, -1).pow(3);
        assert_eq!(w.eval(2, 1), rat(8));
        let ls = Weight::Product(vec![Weight::affine(0, 1, 0), Weight::affine(0, 1, 1)]);
        assert_eq!(ls.eval(9, 3), rat(12));
        assert_eq!(ls.to_string(), "k*(k+1)");
        assert_eq!(ls.pow(2).eval(0, 2), rat(36));
        let t = Weight::Table(vec![rat(1), rat(5)]);
        assert_eq!(t.eval(0, -3), rat(1));
        assert_eq!(t.eval(0, 9), rat(5));
        let c = Weight::custom("k==2 ? 11 : 1", |_, k| if k == 2 { rat(11) } else { rat(1) });
        assert_eq!(c.pow(2).eval(0, 2), rat(121));
    }

    #[test]
    fn affine_params_need_common_exponent() {
        let ws = WeightSpec::affine([1, 1, -1, 0, 0, 1], 2);
        let (p, l) = ws.affine_params().unwrap();
        assert_eq!(l, 2);
        assert_eq!(p.to_string(), "(1,1,-1;0,0,1)");
        let mixed = WeightSpec::new(Weight::affine(0, 1, 0).pow(2), Weight::constant(1));
        assert!(mixed.affine_params().is_none());
    }
}
