//! Flat key-value run configuration.
//!
//! A configuration file holds one `key = value` entry per line (`#` starts
//! a comment); keys use the long flag names without the leading dashes.
//! Command-line flags always win over file entries. One file may serve
//! several subcommands, so the whole flag vocabulary is accepted and each
//! command reads only the keys it uses; keys outside the vocabulary are
//! rejected to catch typos early.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::errors::{data, usage, CliResult};

/// Every key any subcommand understands.
const KNOWN_KEYS: [&str; 19] = [
    "n",
    "sigma",
    "edits",
    "count",
    "seed",
    "theta",
    "algos",
    "q-set",
    "c-set",
    "prune-width",
    "bucket",
    "out",
    "threads",
    "timing",
    "dump-ratios",
    "k",
    "c",
    "j",
    "n-grid",
];

/// Parsed configuration file contents (possibly empty).
pub struct Config(BTreeMap<String, String>);

impl Config {
    /// Loads `path` when given; no path means an empty configuration.
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(Self(BTreeMap::new()));
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| data(format!("cannot read config {}: {e}", path.display())))?;
        let mut map = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(usage(format!(
                    "{}:{}: expected key=value, got {line:?}",
                    path.display(),
                    idx + 1
                )));
            };
            let key = key.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(usage(format!(
                    "{}:{}: unknown configuration key {key:?}",
                    path.display(),
                    idx + 1
                )));
            }
            map.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Self(map))
    }

    fn parsed<T>(&self, key: &str) -> CliResult<Option<T>>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        match self.0.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|e| usage(format!("configuration key {key} = {raw:?}: {e}"))),
        }
    }
}

/// The effective value of an option: flag, else configuration, else default.
pub fn resolve<T>(flag: Option<T>, cfg: &Config, key: &str, default: T) -> CliResult<T>
where
    T: FromStr,
    T::Err: fmt::Display,
{
    Ok(flag.or(cfg.parsed(key)?).unwrap_or(default))
}

/// The effective value of an option that may legitimately stay unset.
pub fn resolve_optional<T>(flag: Option<T>, cfg: &Config, key: &str) -> CliResult<Option<T>>
where
    T: FromStr,
    T::Err: fmt::Display,
{
    match flag {
        Some(v) => Ok(Some(v)),
        None => cfg.parsed(key),
    }
}

/// Like [`resolve`] but with no default: missing everywhere is a usage
/// error naming the flag.
pub fn resolve_required<T>(flag: Option<T>, cfg: &Config, key: &str) -> CliResult<T>
where
    T: FromStr,
    T::Err: fmt::Display,
{
    flag.or(cfg.parsed(key)?)
        .ok_or_else(|| usage(format!("missing required --{key} (flag or configuration)")))
}
