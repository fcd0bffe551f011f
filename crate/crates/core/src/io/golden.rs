//! Flat-file store of reference values, each tagged with where it came from
//! and re-derivable from its key.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::angle::{angle_elliptic, limit_at_threshold, period};
use crate::cubic::{admissible_lower_bound, CurveParams};
use crate::error::{Error, Result};
use crate::io::format::{to_json, write_atomic};
use crate::stability::critical_circle;
use crate::trace::{closure_search, eca_length, trace_curve};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Quoted in the published source.
    Published,
    /// Computed by an independent high-precision oracle.
    Oracle,
    /// A closed-form expression evaluated exactly.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenEntry {
    pub value: f64,
    pub provenance: Provenance,
    /// How the value was obtained.
    pub oracle: String,
    /// Relative tolerance for re-derivation.
    pub tolerance: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenStore {
    pub entries: BTreeMap<String, GoldenEntry>,
}

/// Result of re-deriving one entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub key: String,
    pub stored: f64,
    pub computed: f64,
    pub relative_error: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.relative_error <= self.tolerance
    }
}

/// Canonical key `op(name=value,…)` with the names sorted.
pub fn key(op: &str, params: &[(&str, f64)]) -> String {
    let mut params = params.to_vec();
    params.sort_by(|a, b| a.0.cmp(b.0));
    let body: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{op}({})", body.join(","))
}

/// Splits a canonical key into the operation name and its parameters.
pub fn parse_key(key: &str) -> Result<(String, BTreeMap<String, f64>)> {
    let bad = || Error::Domain(format!("malformed golden key {key:?}"));
    let (op, rest) = key.split_once('(').ok_or_else(bad)?;
    let body = rest.strip_suffix(')').ok_or_else(bad)?;
    let mut params = BTreeMap::new();
    for part in body.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(bad)?;
        params.insert(k.to_string(), v.parse::<f64>().map_err(|_| bad())?);
    }
    Ok((op.to_string(), params))
}

/// Recomputes the quantity named by a key with the library.
pub fn rederive(key: &str) -> Result<f64> {
    let (op, params) = parse_key(key)?;
    let get =
        |name: &str| params.get(name).copied().ok_or_else(|| Error::Domain(format!("golden key {key:?} lacks {name}")));
    let curve = || CurveParams::new(get("R")?, get("C1")?, get("C2")?);
    match op.as_str() {
        "period" => period(&curve()?),
        "angle" => Ok(angle_elliptic(&curve()?)?.lambda_theta),
        "threshold" => Ok(admissible_lower_bound(get("C1")?, get("R")?)),
        "limit" => Ok(limit_at_threshold(get("C1")?, get("R")?)),
        "closure" => {
            let p = closure_search(get("p")? as u64, get("q")? as u64, get("C1")?, get("R")?)?;
            Ok(p.c2)
        }
        "circle-ecl" => Ok(eca_length(&trace_curve(&critical_circle(get("R")?, 2000)?, 1)?)),
        other => Err(Error::Domain(format!("unknown golden operation {other:?}"))),
    }
}

impl GoldenStore {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        write_atomic(path, to_json(self)?.as_bytes())
    }

    pub fn get(&self, key: &str) -> Option<&GoldenEntry> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, entry: GoldenEntry) -> Result<()> {
        if !entry.value.is_finite() || !(entry.tolerance >= 0.0) || entry.oracle.trim().is_empty() {
            return Err(Error::Domain(format!(
                "golden entry {key} needs a finite value, a tolerance and an oracle description"
            )));
        }
        parse_key(&key)?;
        self.entries.insert(key, entry);
        Ok(())
    }

    /// Re-derives one stored value.
    pub fn check(&self, key: &str) -> Result<Check> {
        let entry = self.get(key).ok_or_else(|| Error::Domain(format!("no golden entry {key:?}")))?;
        let computed = rederive(key)?;
        Ok(Check {
            key: key.to_string(),
            stored: entry.value,
            computed,
            relative_error: (computed - entry.value).abs() / entry.value.abs().max(1.0),
            tolerance: entry.tolerance,
        })
    }

    /// Re-derives every entry, in key order.
    pub fn check_all(&self) -> Result<Vec<Check>> {
        self.entries.keys().map(|k| self.check(k)).collect()
    }
}
