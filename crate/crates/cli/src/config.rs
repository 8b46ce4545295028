//! Config resolution: inline flags, equal division, or a config file.
//!
//! The file format is three keys, each a comma-separated list of `num/den`
//! fractions; blank values, blank lines and `#` comments are fine:
//!
//! ```text
//! # three cevians
//! feet_a = 1/3, 1/2
//! feet_b = 2/5
//! feet_c =
//! ```
//!
//! Bracketed/quoted lists (`feet_a = ["1/3", "1/2"]`) are tolerated.

use cevian_core::geom::parse_rational;
use cevian_core::{CevianConfig, Rational};

use crate::commands::CliError;
use crate::SourceArgs;

pub fn resolve(source: &SourceArgs) -> Result<CevianConfig, CliError> {
    let inline = !source.a.is_empty() || !source.b.is_empty() || !source.c.is_empty();
    let picked = [source.equal.is_some(), source.config.is_some(), inline]
        .into_iter()
        .filter(|p| *p)
        .count();
    if picked != 1 {
        return Err(CliError::Validation(
            "exactly one config source required: --equal N, --config FILE, or --a/--b/--c".into(),
        ));
    }
    if let Some(n) = source.equal {
        return Ok(CevianConfig::equal_division(n)?);
    }
    if let Some(path) = &source.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        return parse_config_file(&text);
    }
    let feet = |values: &[String]| -> Result<Vec<Rational>, CliError> {
        values.iter().map(|v| Ok(parse_rational(v)?)).collect()
    };
    Ok(CevianConfig::new(
        feet(&source.a)?,
        feet(&source.b)?,
        feet(&source.c)?,
    )?)
}

pub fn parse_config_file(text: &str) -> Result<CevianConfig, CliError> {
    let mut lists: [Option<Vec<Rational>>; 3] = [None, None, None];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| CliError::Validation(format!("config line {}: {msg}", lineno + 1));
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| at(format!("expected `key = value`, got {line:?}")))?;
        let slot = match key.trim().to_ascii_lowercase().as_str() {
            "feet_a" => 0,
            "feet_b" => 1,
            "feet_c" => 2,
            other => return Err(at(format!("unknown key {other:?}"))),
        };
        if lists[slot].is_some() {
            return Err(at(format!("duplicate key feet_{}", ["a", "b", "c"][slot])));
        }
        let cleaned: String = value
            .chars()
            .filter(|ch| !matches!(ch, '[' | ']' | '"' | '\''))
            .collect();
        let mut feet = Vec::new();
        for token in cleaned.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            feet.push(parse_rational(token).map_err(|e| at(e.to_string()))?);
        }
        lists[slot] = Some(feet);
    }
    let [a, b, c] = lists;
    Ok(CevianConfig::new(
        a.unwrap_or_default(),
        b.unwrap_or_default(),
        c.unwrap_or_default(),
    )?)
}
