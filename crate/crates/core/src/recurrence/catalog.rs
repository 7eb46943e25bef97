use serde::Serialize;

use super::{Cell, RecurrenceError, RecurrenceSpec, Weight, WeightSpec};

/// Free parameters of the catalog families. Each entry reads only the ones it needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogParams {
    /// Exponent applied to both weights.
    pub l: u32,
    pub r: u32,
    pub m: i64,
    pub nu: i64,
    pub j: i64,
}

impl Default for CatalogParams {
    fn default() -> Self {
        Self { l: 1, r: 1, m: 2, nu: 2, j: 2 }
    }
}

impl CatalogParams {
    pub fn with_l(l: u32) -> Self {
        Self { l, ..Self::default() }
    }

    pub fn with_lr(l: u32, r: u32) -> Self {
        Self { l, r, ..Self::default() }
    }
}

type Builder = fn(&CatalogParams) -> Result<(WeightSpec, Cell), RecurrenceError>;

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    /// Parameters beyond `l` that the entry reads.
    pub params: &'static [&'static str],
    build: Builder,
}

const ORIGIN: Cell = Cell::new(0, 0);

fn affine(p: [i64; 6]) -> Result<(WeightSpec, Cell), RecurrenceError> {
    Ok((WeightSpec::affine(p, 1), ORIGIN))
}

fn need_r(p: &CatalogParams) -> Result<i64, RecurrenceError> {
    if p.r == 0 {
        return Err(RecurrenceError::BadParameter("r must be at least 1".into()));
    }
    Ok(p.r as i64)
}

fn need_positive(name: &str, v: i64) -> Result<i64, RecurrenceError> {
    if v < 1 {
        return Err(RecurrenceError::BadParameter(format!("{name} must be at least 1")));
    }
    Ok(v)
}

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "binomial",
        summary: "binomial coefficients (0,0,1;0,0,1)",
        params: &[],
        build: |_| affine([0, 0, 1, 0, 0, 1]),
    },
    CatalogEntry {
        name: "stirling-subset",
        summary: "Stirling numbers of the second kind (0,1,0;0,0,1)",
        params: &[],
        build: |_| affine([0, 1, 0, 0, 0, 1]),
    },
    CatalogEntry {
        name: "stirling-cycle",
        summary: "unsigned Stirling numbers of the first kind (1,0,-1;0,0,1)",
        params: &[],
        build: |_| affine([1, 0, -1, 0, 0, 1]),
    },
    CatalogEntry {
        name: "lah",
        summary: "unsigned Lah numbers (1,1,-1;0,0,1)",
        params: &[],
        build: |_| affine([1, 1, -1, 0, 0, 1]),
    },
    CatalogEntry {
        name: "m-lah",
        summary: "m-associated Lah numbers (1,m,-1;0,0,m)",
        params: &["m"],
        build: |p| {
            let m = need_positive("m", p.m)?;
            affine([1, m, -1, 0, 0, m])
        },
    },
    CatalogEntry {
        name: "lah-stirling",
        summary: "Lah/Stirling generalisation (2,1,-2;0,0,1)",
        params: &[],
        build: |_| affine([2, 1, -2, 0, 0, 1]),
    },
    CatalogEntry {
        name: "broder-r",
        summary: "S(r,n,k) family (r-1,1,1-r;0,0,1)",
        params: &["r"],
        build: |p| {
            let r = need_r(p)?;
            affine([r - 1, 1, 1 - r, 0, 0, 1])
        },
    },
    CatalogEntry {
        name: "nu-eulerian",
        summary: "nu-order Eulerian numbers (0,1,1;nu,-1,1-nu)",
        params: &["nu"],
        build: |p| {
            let nu = need_positive("nu", p.nu)?;
            affine([0, 1, 1, nu, -1, 1 - nu])
        },
    },
    CatalogEntry {
        name: "j-eulerian",
        summary: "1/j-Eulerian numbers (0,j,1;j,-j,0)",
        params: &["j"],
        build: |p| {
            let j = need_positive("j", p.j)?;
            affine([0, j, 1, j, -j, 0])
        },
    },
    CatalogEntry {
        name: "eulerian",
        summary: "classical Eulerian numbers, c = k+1, d = n-k",
        params: &[],
        build: |_| affine([0, 1, 1, 1, -1, 0]),
    },
    CatalogEntry {
        name: "narayana-a",
        summary: "scaled type A Narayana numbers (1,2,-1;3,-2,1)",
        params: &[],
        build: |_| affine([1, 2, -1, 3, -2, 1]),
    },
    CatalogEntry {
        name: "narayana-b",
        summary: "scaled type B Narayana numbers (1,2,0;3,-2,0)",
        params: &[],
        build: |_| affine([1, 2, 0, 3, -2, 0]),
    },
    CatalogEntry {
        name: "holiday-1",
        summary: "holiday numbers of the first kind (2,1,-1;0,0,1)",
        params: &[],
        build: |_| affine([2, 1, -1, 0, 0, 1]),
    },
    CatalogEntry {
        name: "holiday-2",
        summary: "holiday numbers of the second kind (2,1,0;0,0,1)",
        params: &[],
        build: |_| affine([2, 1, 0, 0, 0, 1]),
    },
    CatalogEntry {
        name: "legendre-stirling",
        summary: "Legendre-Stirling numbers, c = k^2+k, d = 1",
        params: &[],
        build: |_| {
            let c = Weight::Product(vec![Weight::affine(0, 1, 0), Weight::affine(0, 1, 1)]);
            Ok((WeightSpec::new(c, Weight::constant(1)), ORIGIN))
        },
    },
    CatalogEntry {
        name: "lr-stirling1",
        summary: "(l,r)-Stirling numbers of the first kind, c = (n-1)^l, anchor (r,r)",
        params: &["r"],
        build: |p| {
            let r = need_r(p)?;
            Ok((WeightSpec::affine([1, 0, -1, 0, 0, 1], 1), Cell::new(r, r)))
        },
    },
    CatalogEntry {
        name: "lr-stirling2",
        summary: "(l,r)-Stirling numbers of the second kind, c = k^l, anchor (r,r)",
        params: &["r"],
        build: |p| {
            let r = need_r(p)?;
            Ok((WeightSpec::affine([0, 1, 0, 0, 0, 1], 1), Cell::new(r, r)))
        },
    },
    CatalogEntry {
        name: "lr-lah",
        summary: "(l,r)-Lah numbers in shifted form, c = (n+k+2r-3)^l, anchor (0,0)",
        params: &["r"],
        build: |p| {
            let r = need_r(p)?;
            affine([1, 1, 2 * r - 3, 0, 0, 1])
        },
    },
    CatalogEntry {
        name: "lr-lah-leader",
        summary: "(l,r)-Lah numbers in leader indexing, c = (n+k-1)^l, anchor (r,r)",
        params: &["r"],
        build: |p| {
            let r = need_r(p)?;
            Ok((WeightSpec::affine([1, 1, -1, 0, 0, 1], 1), Cell::new(r, r)))
        },
    },
    CatalogEntry {
        name: "lr-eulerian",
        summary: "(l,r)-Eulerian numbers, c = (k+1)^l, d = (n-k)^l, anchor (r,r-1)",
        params: &["r"],
        build: |p| {
            let r = need_r(p)?;
            Ok((WeightSpec::affine([0, 1, 1, 1, -1, 0], 1), Cell::new(r, r - 1)))
        },
    },
];

pub fn catalog_entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// Looks up a named family and applies the exponent `params.l` to both weights.
pub fn catalog_lookup(name: &str, params: &CatalogParams) -> Result<RecurrenceSpec, RecurrenceError> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| RecurrenceError::UnknownName(name.to_string()))?;
    if params.l == 0 {
        return Err(RecurrenceError::BadParameter("l must be at least 1".into()));
    }
    let (base, anchor) = (entry.build)(params)?;
    let spec = power_lift(&RecurrenceSpec::new(base, anchor), params.l);
    let mut tags = vec![format!("l={}", params.l)];
    for p in entry.params {
        let v = match *p {
            "r" => params.r as i64,
            "m" => params.m,
            "nu" => params.nu,
            "j" => params.j,
            _ => unreachable!(),
        };
        tags.push(format!("{p}={v}"));
    }
    let mut weights = spec.weights;
    weights.description = format!("{name} ({}): {}", tags.join(", "), weights.description);
    Ok(RecurrenceSpec::new(weights, spec.anchor))
}

/// Replaces `c, d` by `c^l, d^l`; the anchor is unchanged.
pub fn power_lift(spec: &RecurrenceSpec, l: u32) -> RecurrenceSpec {
    RecurrenceSpec::new(spec.weights.pow(l), spec.anchor)
}
