//! Turns the spec-source flags into a [`RecurrenceSpec`].
//!
//! Exactly one source per run: `--catalog`, `--inline`/`--c`/`--d`, or the
//! six affine flags. `--l` lifts every source; `--anchor` overrides the anchor.

use clap::Args;
use serde_json::{json, Value};

use super::CliError;
use crate::algebra::{parse_rational, rat, BigRational};
use crate::recurrence::{
    catalog_lookup, parse_inline_spec, parse_weight, power_lift, AffinePower, CatalogParams, Cell, RecurrenceSpec,
    Weight, WeightSpec,
};

#[derive(Debug, Clone, Default, Args)]
pub struct SpecArgs {
    /// Catalog family (see `trirec catalog`).
    #[arg(long)]
    pub catalog: Option<String>,
    /// `c=EXPR;d=EXPR`; `d` defaults to 1.
    #[arg(long, allow_hyphen_values = true)]
    pub inline: Option<String>,
    /// North-step weight expression.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// Cross-step weight expression (default 1).
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// c = (alpha n + beta k + gamma)^l, missing coefficients are 0.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// d = (alpha2 n + beta2 k + gamma2)^l.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma2: Option<String>,
    /// Exponent applied to both weights.
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long)]
    pub nu: Option<i64>,
    #[arg(long)]
    pub j: Option<i64>,
    /// Anchor cell `n0,k0` (default: the catalog anchor, or 0,0).
    #[arg(long, allow_hyphen_values = true)]
    pub anchor: Option<String>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn parse_anchor(s: &str) -> Result<Cell, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [n, k] => {
            let n = n.parse::<i64>().map_err(|_| usage(format!("bad anchor row {n:?}")))?;
            let k = k.parse::<i64>().map_err(|_| usage(format!("bad anchor column {k:?}")))?;
            Ok(Cell::new(n, k))
        }
        _ => Err(usage(format!("anchor must be `n0,k0`, got {s:?}"))),
    }
}

fn coefficient(name: &str, v: &Option<String>) -> Result<BigRational, CliError> {
    match v {
        None => Ok(rat(0)),
        Some(s) => parse_rational(s).map_err(|e| usage(format!("--{name}: {e}"))),
    }
}

impl SpecArgs {
    fn affine_given(&self) -> bool {
        [&self.alpha, &self.beta, &self.gamma, &self.alpha2, &self.beta2, &self.gamma2].iter().any(|v| v.is_some())
    }

    fn inline_given(&self) -> bool {
        self.inline.is_some() || self.c.is_some() || self.d.is_some()
    }

    pub fn any_given(&self) -> bool {
        self.catalog.is_some() || self.inline_given() || self.affine_given()
    }

    /// The flags as given, for the report's `config` block.
    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        let mut put = |k: &str, v: Option<Value>| {
            if let Some(v) = v {
                m.insert(k.to_string(), v);
            }
        };
        put("catalog", self.catalog.clone().map(Value::from));
        put("inline", self.inline.clone().map(Value::from));
        put("c", self.c.clone().map(Value::from));
        put("d", self.d.clone().map(Value::from));
        put("alpha", self.alpha.clone().map(Value::from));
        put("beta", self.beta.clone().map(Value::from));
        put("gamma", self.gamma.clone().map(Value::from));
        put("alpha2", self.alpha2.clone().map(Value::from));
        put("beta2", self.beta2.clone().map(Value::from));
        put("gamma2", self.gamma2.clone().map(Value::from));
        put("l", self.l.map(|v| json!(v)));
        put("r", self.r.map(|v| json!(v)));
        put("m", self.m.map(|v| json!(v)));
        put("nu", self.nu.map(|v| json!(v)));
        put("j", self.j.map(|v| json!(v)));
        put("anchor", self.anchor.clone().map(Value::from));
        Value::Object(m)
    }
}

/// Resolves exactly one spec source.
pub fn resolve_spec(a: &SpecArgs) -> Result<RecurrenceSpec, CliError> {
    let sources = [a.catalog.is_some(), a.inline_given(), a.affine_given()];
    match sources.iter().filter(|&&b| b).count() {
        0 => return Err(usage("give one spec source: --catalog, --inline (or --c/--d), or --alpha..--gamma2")),
        1 => {}
        _ => return Err(usage("--catalog, --inline/--c/--d and the affine flags are mutually exclusive")),
    }
    if a.catalog.is_none() && (a.r.is_some() || a.m.is_some() || a.nu.is_some() || a.j.is_some()) {
        return Err(usage("--r, --m, --nu and --j only apply with --catalog"));
    }
    if a.l == Some(0) {
        return Err(usage("--l must be at least 1"));
    }
    let l = a.l.unwrap_or(1);

    let mut spec = if let Some(name) = &a.catalog {
        let d = CatalogParams::default();
        let params = CatalogParams {
            l,
            r: a.r.unwrap_or(d.r),
            m: a.m.unwrap_or(d.m),
            nu: a.nu.unwrap_or(d.nu),
            j: a.j.unwrap_or(d.j),
        };
        catalog_lookup(name, &params).map_err(|e| CliError::Build(e.to_string()))?
    } else if a.inline_given() {
        let weights = match (&a.inline, &a.c, &a.d) {
            (Some(s), None, None) => parse_inline_spec(s),
            (None, Some(c), d) => {
                let d = match d {
                    Some(d) => parse_weight(d),
                    None => Ok(Weight::constant(1)),
                };
                parse_weight(c).and_then(|c| d.map(|d| WeightSpec::new(c, d)))
            }
            (None, None, Some(_)) => return Err(usage("--d needs --c")),
            _ => return Err(usage("--inline cannot be combined with --c/--d")),
        }
        .map_err(|e| usage(e.to_string()))?;
        power_lift(&RecurrenceSpec::new(weights, Cell::new(0, 0)), l)
    } else {
        let side = |x: &Option<String>, y: &Option<String>, z: &Option<String>, names: [&str; 3]| {
            Ok::<_, CliError>(Weight::Affine(AffinePower::new(
                coefficient(names[0], x)?,
                coefficient(names[1], y)?,
                coefficient(names[2], z)?,
                l,
            )))
        };
        let c = side(&a.alpha, &a.beta, &a.gamma, ["alpha", "beta", "gamma"])?;
        let d = side(&a.alpha2, &a.beta2, &a.gamma2, ["alpha2", "beta2", "gamma2"])?;
        RecurrenceSpec::new(WeightSpec::new(c, d), Cell::new(0, 0))
    };
    if let Some(s) = &a.anchor {
        spec.anchor = parse_anchor(s)?;
    }
    Ok(spec)
}
