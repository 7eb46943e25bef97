//! OEIS b-files: parsing, a disk cache, embedded golden prefixes, and triangle comparison.

use std::path::{Path, PathBuf};
use std::time::Duration;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::recurrence::{build_array, catalog_lookup, CatalogParams, RecurrenceError};
use crate::serde_support::{bigint, bigint_vec};

pub const CACHE_ENV: &str = "TRIREC_CACHE_DIR";
pub const OFFLINE_ENV: &str = "TRIREC_OFFLINE";

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("malformed b-file line {line}: {text:?}")]
    Parse { line: usize, text: String },
    #[error("bad OEIS id {0:?} (expected A followed by six digits)")]
    BadId(String),
    #[error("could not obtain {id}: {reason}")]
    FetchFailed { id: String, reason: String },
    #[error("no fixture metadata for {0}")]
    NoMapping(String),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
}

/// Lines `index value`; blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, OeisError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || OeisError::Parse { line: i + 1, text: raw.to_string() };
        let mut it = line.split_whitespace();
        let (Some(idx), Some(val), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        out.push((idx.parse().map_err(|_| bad())?, val.parse().map_err(|_| bad())?));
    }
    Ok(out)
}

fn values(text: &str) -> Result<Vec<BigInt>, OeisError> {
    Ok(parse_bfile(text)?.into_iter().map(|(_, v)| v).collect())
}

pub fn validate_id(id: &str) -> Result<(), OeisError> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(OeisError::BadId(id.to_string()))
    }
}

pub fn bfile_url(id: &str) -> String {
    format!("https://oeis.org/{id}/b{}.txt", &id[1..])
}

/// How a triangle is flattened: rows from `row_from`, columns `col_from..=n + col_to_offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureMeta {
    pub id: String,
    pub catalog: String,
    #[serde(default)]
    pub params: serde_json::Map<String, serde_json::Value>,
    pub file: String,
    pub terms: usize,
    pub row_from: i64,
    pub col_from: i64,
    pub col_to_offset: i64,
    #[serde(default)]
    pub notes: Option<String>,
}

#[derive(Debug, Deserialize)]
struct Manifest {
    fixtures: Vec<FixtureMeta>,
}

const MANIFEST: &str = include_str!("../fixtures/oeis/manifest.json");

const GOLDEN_FILES: &[(&str, &str)] = &[
    ("A007318", include_str!("../fixtures/oeis/A007318.txt")),
    ("A008277", include_str!("../fixtures/oeis/A008277.txt")),
    ("A132393", include_str!("../fixtures/oeis/A132393.txt")),
    ("A105278", include_str!("../fixtures/oeis/A105278.txt")),
    ("A173018", include_str!("../fixtures/oeis/A173018.txt")),
];

pub fn fixtures() -> Vec<FixtureMeta> {
    serde_json::from_str::<Manifest>(MANIFEST).expect("embedded manifest is valid").fixtures
}

pub fn fixture(id: &str) -> Option<FixtureMeta> {
    fixtures().into_iter().find(|f| f.id == id)
}

/// Embedded b-file text, byte-identical to `fixtures/oeis/<id>.txt`.
pub fn golden_text(id: &str) -> Option<&'static str> {
    GOLDEN_FILES.iter().find(|(i, _)| *i == id).map(|(_, t)| *t)
}

#[derive(Debug, Clone, Serialize)]
pub struct GoldenPrefix {
    pub id: String,
    #[serde(serialize_with = "bigint_vec")]
    pub values: Vec<BigInt>,
    pub read_order: &'static str,
}

pub fn golden(id: &str) -> Option<GoldenPrefix> {
    let text = golden_text(id)?;
    Some(GoldenPrefix {
        id: id.to_string(),
        values: values(text).expect("embedded fixture parses"),
        read_order: "by_rows",
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Live,
    Cache,
    Golden,
}

#[derive(Debug, Clone, Serialize)]
pub struct Fetched {
    pub id: String,
    pub source: Source,
    #[serde(serialize_with = "bigint_vec")]
    pub values: Vec<BigInt>,
}

/// Lookup order: live (only if `live` and not offline), disk cache, embedded golden prefix.
#[derive(Debug, Clone, Default)]
pub struct OeisClient {
    pub cache_dir: Option<PathBuf>,
    pub offline: bool,
    pub live: bool,
}

impl OeisClient {
    /// Reads the cache directory and offline flag from the environment.
    pub fn from_env(live: bool) -> Self {
        let offline = std::env::var(OFFLINE_ENV).map(|v| !v.is_empty() && v != "0").unwrap_or(false);
        let cache_dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
        Self { cache_dir, offline, live }
    }

    fn cache_path(&self, id: &str) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(format!("b{}.txt", &id[1..])))
    }

    pub fn fetch(&self, id: &str) -> Result<Fetched, OeisError> {
        validate_id(id)?;
        let mut reasons = Vec::new();
        if self.live && !self.offline {
            match download(id) {
                Ok(text) => {
                    let vals = values(&text)?;
                    if let Some(p) = self.cache_path(id) {
                        if let Err(e) = write_cache(&p, &text) {
                            reasons.push(format!("cache write failed: {e}"));
                        }
                    }
                    return Ok(Fetched { id: id.into(), source: Source::Live, values: vals });
                }
                Err(e) => reasons.push(e),
            }
        }
        if let Some(p) = self.cache_path(id) {
            if let Ok(text) = std::fs::read_to_string(&p) {
                return Ok(Fetched { id: id.into(), source: Source::Cache, values: values(&text)? });
            }
            reasons.push(format!("no cache entry at {}", p.display()));
        }
        if let Some(g) = golden(id) {
            return Ok(Fetched { id: id.into(), source: Source::Golden, values: g.values });
        }
        reasons.push("no embedded prefix".into());
        Err(OeisError::FetchFailed { id: id.into(), reason: reasons.join("; ") })
    }
}

fn write_cache(path: &Path, text: &str) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, text)
}

fn download(id: &str) -> Result<String, String> {
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(Duration::from_secs(20)))
        .build()
        .into();
    agent
        .get(&bfile_url(id))
        .call()
        .map_err(|e| e.to_string())?
        .body_mut()
        .read_to_string()
        .map_err(|e| e.to_string())
}

/// Triangle entries in the fixture's reading order, at least `terms` of them.
pub fn flatten_triangle(meta: &FixtureMeta, terms: usize) -> Result<Vec<BigInt>, OeisError> {
    let mut params = CatalogParams::default();
    for (k, v) in &meta.params {
        let v = v.as_i64().ok_or_else(|| OeisError::NoMapping(format!("{}: non-integer parameter {k}", meta.id)))?;
        match k.as_str() {
            "l" => params.l = v as u32,
            "r" => params.r = v as u32,
            "m" => params.m = v,
            "nu" => params.nu = v,
            "j" => params.j = v,
            _ => return Err(OeisError::NoMapping(format!("{}: unknown parameter {k}", meta.id))),
        }
    }
    let spec = catalog_lookup(&meta.catalog, &params)?;
    let mut out = Vec::with_capacity(terms);
    let mut n = meta.row_from;
    let mut max_n = meta.row_from.max(spec.anchor.n) + 8;
    let mut arr = build_array(&spec, max_n)?;
    while out.len() < terms {
        if n > max_n {
            max_n *= 2;
            arr = build_array(&spec, max_n)?;
        }
        for k in meta.col_from..=n + meta.col_to_offset {
            out.push(arr.get(n, k).to_integer());
        }
        n += 1;
    }
    out.truncate(terms);
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub id: String,
    pub catalog: String,
    pub source: Source,
    pub terms_compared: usize,
    pub matches: bool,
    pub first_mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub index: usize,
    #[serde(serialize_with = "bigint")]
    pub expected: BigInt,
    #[serde(serialize_with = "bigint")]
    pub actual: BigInt,
}

/// Compares the mapped catalog triangle against the b-file values term by term.
pub fn compare(client: &OeisClient, id: &str, max_terms: Option<usize>) -> Result<Comparison, OeisError> {
    let meta = fixture(id).ok_or_else(|| OeisError::NoMapping(id.to_string()))?;
    let fetched = client.fetch(id)?;
    let terms = max_terms.map_or(fetched.values.len(), |m| m.min(fetched.values.len()));
    let ours = flatten_triangle(&meta, terms)?;
    let first_mismatch = fetched.values[..terms]
        .iter()
        .zip(&ours)
        .position(|(a, b)| a != b)
        .map(|i| Mismatch { index: i, expected: fetched.values[i].clone(), actual: ours[i].clone() });
    Ok(Comparison {
        id: id.to_string(),
        catalog: meta.catalog,
        source: fetched.source,
        terms_compared: terms,
        matches: first_mismatch.is_none(),
        first_mismatch,
    })
}
