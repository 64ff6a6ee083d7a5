//! Library side of the `sextic` binary, so integration tests can call the
//! commands without spawning a process.

pub mod commands;
pub mod report;

use std::path::Path;

use sextic_core::plane::ref6;
use sextic_core::{Config6, Rational, TernaryForm};

/// Problems with user input. These map to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("bad --member value {0:?}: expected LAMBDA:MU with rational entries")]
    Member(String),
    #[error("--trials must be at least 1")]
    Trials,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Read { path: shown.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| InputError::Json { path: shown, source })
}

/// The configuration at `path`, or the built-in reference configuration.
pub fn load_config(path: Option<&Path>) -> Result<(Config6, String), InputError> {
    match path {
        None => Ok((ref6(), "builtin:ref6".into())),
        Some(p) => Ok((read_json(p)?, p.display().to_string())),
    }
}

/// A sextic given as `[[i, j, k, "p/q"], ...]`.
pub fn load_form(path: &Path) -> Result<TernaryForm, InputError> {
    read_json(path)
}

pub fn parse_member(s: &str) -> Result<(Rational, Rational), InputError> {
    let bad = || InputError::Member(s.to_string());
    let (l, m) = s.split_once(':').ok_or_else(bad)?;
    let l: Rational = l.trim().parse().map_err(|_| bad())?;
    let m: Rational = m.trim().parse().map_err(|_| bad())?;
    if l.is_zero() && m.is_zero() {
        return Err(bad());
    }
    Ok((l, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_parsing() {
        let (l, m) = parse_member("2:-1/3").unwrap();
        assert_eq!((l, m), (Rational::from(2), Rational::new(-1, 3)));
        for bad in ["", "1", "1:2:3", "a:1", "0:0"] {
            assert!(parse_member(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn default_input_is_the_reference() {
        let (c, source) = load_config(None).unwrap();
        assert_eq!(c, ref6());
        assert_eq!(source, "builtin:ref6");
    }
}
