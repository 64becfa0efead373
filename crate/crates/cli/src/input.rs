//! The line-oriented fixture format.
//!
//! ```text
//! # comment
//! vars: x, y, z, w
//! f: (x^2+y^2-z*w)^2-2*w^4
//! arrangement: false
//! syz rho1: (0, w, 2*y, 0)
//! label: quartic with a double conic
//! ```

use std::collections::BTreeMap;

use jacsyz_core::{parse_polynomial, ModuleVector, Polynomial, Ring};

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InputSpec {
    pub vars: Vec<String>,
    pub f: String,
    pub arrangement: bool,
    /// Named syzygy vectors, entries still as text.
    pub syzygies: Vec<(String, Vec<String>)>,
    /// Any other `key: value` line.
    pub labels: BTreeMap<String, String>,
}

/// A parsed input, ready for the library.
#[derive(Clone, Debug)]
pub struct Problem {
    pub ring: Ring,
    pub f: Polynomial,
    pub arrangement: bool,
    pub declared: Vec<(String, ModuleVector)>,
}

fn parse_error(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("line {line}: {msg}"))
}

/// Split on commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

impl InputSpec {
    pub fn parse(text: &str) -> Result<InputSpec, CliError> {
        let mut spec = InputSpec::default();
        let (mut have_vars, mut have_f) = (false, false);
        for (no, raw) in text.lines().enumerate() {
            let no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once(':') else {
                return Err(parse_error(no, "expected `key: value`"));
            };
            let (key, value) = (key.trim(), value.trim());
            if let Some(name) = key.strip_prefix("syz ") {
                let name = name.trim();
                if name.is_empty() || spec.syzygies.iter().any(|(n, _)| n == name) {
                    return Err(parse_error(no, format!("bad or repeated syzygy name `{name}`")));
                }
                let inner = value
                    .strip_prefix('(')
                    .and_then(|v| v.strip_suffix(')'))
                    .ok_or_else(|| parse_error(no, "syzygy must be written `(p0, ..., pn)`"))?;
                let parts = split_top_level(inner).into_iter().map(str::to_string).collect();
                spec.syzygies.push((name.to_string(), parts));
                continue;
            }
            match key {
                "vars" => {
                    spec.vars = value.split(',').map(|v| v.trim().to_string()).collect();
                    have_vars = true;
                }
                "f" => {
                    spec.f = value.to_string();
                    have_f = true;
                }
                "arrangement" => {
                    spec.arrangement = match value {
                        "true" | "yes" => true,
                        "false" | "no" => false,
                        _ => return Err(parse_error(no, format!("expected true or false, got `{value}`"))),
                    }
                }
                _ => {
                    spec.labels.insert(key.to_string(), value.to_string());
                }
            }
        }
        if !have_vars {
            return Err(CliError::Parse("missing `vars:` line".into()));
        }
        if !have_f {
            return Err(CliError::Parse("missing `f:` line".into()));
        }
        if spec.vars.len() < 3 {
            return Err(CliError::Parse(format!(
                "at least 3 variables are required, got {}",
                spec.vars.len()
            )));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Problem, CliError> {
        let ring = Ring::new(&self.vars).map_err(|e| CliError::Parse(e.to_string()))?;
        let f = parse_polynomial(&self.f, &ring).map_err(|e| CliError::Parse(format!("f: {e}")))?;
        let mut declared = Vec::new();
        for (name, parts) in &self.syzygies {
            if parts.len() != ring.nvars() {
                return Err(CliError::Parse(format!(
                    "syzygy {name} has {} entries, expected {}",
                    parts.len(),
                    ring.nvars()
                )));
            }
            let entries = parts
                .iter()
                .map(|p| parse_polynomial(p, &ring))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Parse(format!("syzygy {name}: {e}")))?;
            let v = ModuleVector::unshifted(entries).map_err(|e| CliError::Parse(e.to_string()))?;
            declared.push((name.clone(), v));
        }
        Ok(Problem {
            ring,
            f,
            arrangement: self.arrangement,
            declared,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_every_kind_of_line() {
        let spec = InputSpec::parse(
            "# a quartic\nvars: x, y, z, w\nf: x*y*z-w^3\narrangement: no\n\
             syz rho1: (0, y, -z, 0)\nsyz rho2: (x, 0, -(z), 0)\nlabel: demo\n",
        )
        .unwrap();
        assert_eq!(spec.vars, ["x", "y", "z", "w"]);
        assert_eq!(spec.syzygies[1].1, ["x", "0", "-(z)", "0"]);
        assert_eq!(spec.labels["label"], "demo");
        let p = spec.build().unwrap();
        assert_eq!(p.declared.len(), 2);
    }

    #[test]
    fn reports_malformed_input() {
        assert!(InputSpec::parse("f: x").is_err());
        assert!(InputSpec::parse("vars: x, y\nf: x*y").is_err());
        assert!(InputSpec::parse("vars: x,y,z\nf: x\nsyz a: 0, 1").is_err());
        let bad = InputSpec::parse("vars: x,y,z\nf: x*q").unwrap();
        assert!(matches!(bad.build(), Err(CliError::Parse(_))));
        let short = InputSpec::parse("vars: x,y,z\nf: x*y*z\nsyz a: (x, y)").unwrap();
        assert!(short.build().is_err());
    }
}
