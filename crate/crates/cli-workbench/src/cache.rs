//! Content-hashed structure-constant cache, keyed by backend, cap, and
//! parameter specialization.  A valid cache entry must agree with a fresh
//! build bit for bit; a disagreement is reported as a failure rather than
//! silently preferring either side.

use crate::config::{CliError, RunConfig};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::path::Path;
use weight_algebra::TruncatedAlgebra;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    /// No cache directory configured.
    Off,
    /// Entry written by this run.
    Cold,
    /// Entry present and validated against the fresh build.
    Hit,
}

impl CacheStatus {
    pub fn label(self) -> &'static str {
        match self {
            CacheStatus::Off => "off",
            CacheStatus::Cold => "cold",
            CacheStatus::Hit => "hit",
        }
    }
}

/// The cache key material: backend, cap, and specialization.
pub fn key_material(cfg: &RunConfig) -> String {
    let backend = match cfg.backend {
        regular_backend::Backend::FinSetOp => "finset-op".to_string(),
        regular_backend::Backend::FinVecFq { q } => format!("finvec-q{q}"),
    };
    format!("backend={backend};N={};u={}", cfg.n_cap, cfg.u_label)
}

fn hex_sha256(data: &str) -> String {
    hex::encode(Sha256::digest(data.as_bytes()))
}

/// The structure constants of the truncation in sparse canonical form.
pub fn constants_payload(ta: &TruncatedAlgebra) -> Value {
    let alg = &ta.alg;
    let mut entries = Vec::new();
    for (i, rows) in alg.mult.iter().enumerate() {
        for (j, row) in rows.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    entries.push(json!([i, j, k, c.to_string()]));
                }
            }
        }
    }
    let unit: Vec<String> = alg.unit.iter().map(|c| c.to_string()).collect();
    json!({ "dim": alg.dim, "unit": unit, "mult": entries })
}

/// Validates the cache entry for this configuration against the freshly
/// built truncation, writing it when absent or corrupt.  Returns the
/// status and the content hash.
pub fn validate_or_store(
    cfg: &RunConfig,
    ta: &TruncatedAlgebra,
) -> Result<(CacheStatus, String), CliError> {
    let payload = constants_payload(ta);
    let canonical = serde_json::to_string(&payload).expect("serializable payload");
    let hash = hex_sha256(&canonical);
    let Some(dir) = &cfg.cache_dir else {
        return Ok((CacheStatus::Off, hash));
    };
    let key = key_material(cfg);
    let path = dir.join(format!("sc-{}.json", hex_sha256(&key)));
    if let Some(stored) = read_valid_entry(&path, &key) {
        let stored_hash = stored["content_hash"].as_str().unwrap_or_default();
        if stored_hash == hash {
            return Ok((CacheStatus::Hit, hash));
        }
        return Err(CliError::Failure(
            json!({
                "schema": 1,
                "error": "cache-mismatch",
                "key": key,
                "path": path.display().to_string(),
                "stored_hash": stored_hash,
                "computed_hash": hash,
            })
            .to_string(),
        ));
    }
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Config(format!("cannot create cache dir: {e}")))?;
    let entry = json!({
        "schema": 1,
        "key": key,
        "content_hash": hash,
        "constants": payload,
    });
    std::fs::write(&path, format!("{entry}\n"))
        .map_err(|e| CliError::Config(format!("cannot write cache entry: {e}")))?;
    Ok((CacheStatus::Cold, hash))
}

/// Reads an entry whose key matches and whose stored hash matches its own
/// stored constants; anything else counts as absent (and is overwritten).
fn read_valid_entry(path: &Path, key: &str) -> Option<Value> {
    let text = std::fs::read_to_string(path).ok()?;
    let v: Value = serde_json::from_str(&text).ok()?;
    if v["schema"].as_u64() != Some(1) || v["key"].as_str() != Some(key) {
        return None;
    }
    let canonical = serde_json::to_string(&v["constants"]).ok()?;
    if v["content_hash"].as_str() != Some(hex_sha256(&canonical).as_str()) {
        return None;
    }
    Some(v)
}
