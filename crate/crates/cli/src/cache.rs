//! On-disk cache of constructed exceptional algebras, keyed by kind, field and α.
//!
//! Enabled by setting `SUPERORBIT_CACHE` to a directory.

use std::path::PathBuf;

use superorbit::exceptional::{build, d21_sigma, ExceptionalAlgebra, ExceptionalKind};
use superorbit::{Result, Scalar, SuperAlgebra};

/// Environment variable naming the cache directory.
pub const CACHE_VAR: &str = "SUPERORBIT_CACHE";

fn cache_path<S: Scalar>(kind: ExceptionalKind, alpha: Option<&S>) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_VAR)?;
    let mut key = format!("{}-{}", kind.as_str(), S::field());
    if let Some(a) = alpha {
        key.push('-');
        key.push_str(&a.to_string());
    }
    let key: String = key.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
    Some(PathBuf::from(dir).join(format!("{key}.json")))
}

fn expected_name<S: Scalar>(kind: ExceptionalKind, alpha: Option<&S>) -> String {
    match (kind, alpha) {
        (ExceptionalKind::D21, Some(a)) => format!("D(2,1;{a})"),
        _ => kind.title().to_string(),
    }
}

fn from_cache<S: Scalar>(kind: ExceptionalKind, alpha: Option<&S>, path: &PathBuf) -> Option<ExceptionalAlgebra<S>> {
    let text = std::fs::read_to_string(path).ok()?;
    let algebra = SuperAlgebra::<S>::from_json(&text).ok()?;
    if algebra.name() != expected_name(kind, alpha) {
        return None;
    }
    let sigma = match (kind, alpha) {
        (ExceptionalKind::D21, Some(a)) => Some(d21_sigma(a).ok()?),
        _ => None,
    };
    Some(ExceptionalAlgebra { kind, algebra, sigma })
}

/// Builds an exceptional algebra, reusing and refreshing the cache when enabled.
pub fn load_or_build<S: Scalar>(kind: ExceptionalKind, alpha: Option<&S>) -> Result<ExceptionalAlgebra<S>> {
    let alpha = if kind == ExceptionalKind::D21 { alpha } else { None };
    let path = cache_path(kind, alpha);
    if let Some(hit) = path.as_ref().and_then(|p| from_cache(kind, alpha, p)) {
        return Ok(hit);
    }
    let built = build(kind, alpha)?;
    if let Some(p) = path {
        let written = p
            .parent()
            .map_or(Ok(()), std::fs::create_dir_all)
            .and_then(|_| std::fs::write(&p, built.algebra.to_json()));
        if let Err(e) = written {
            eprintln!("warning: cannot write cache file {}: {e}", p.display());
        }
    }
    Ok(built)
}
