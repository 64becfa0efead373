use std::fmt;
use std::sync::Arc;

use super::monomial::MAX_VARS;
use crate::error::{Error, Result};

/// Variable table of a polynomial ring over ℚ.
#[derive(Clone)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        if names.is_empty() || names.len() > MAX_VARS {
            return Err(Error::BadVariableCount {
                got: names.len(),
                max: MAX_VARS,
            });
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !is_identifier(n) {
                return Err(Error::Invalid(format!("`{n}` is not a valid variable name")));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Ring {
            names: names.into(),
        })
    }

    /// Ring with the conventional names `x, y, z, w` (4 variables or fewer)
    /// or `x, y, z, u, v` (5 variables); `x0, x1, ...` beyond that.
    pub fn standard(nvars: usize) -> Result<Ring> {
        let names: Vec<String> = match nvars {
            1..=3 => ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect(),
            4 => ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect(),
            5 => ["x", "y", "z", "u", "v"].iter().map(|s| s.to_string()).collect(),
            _ => (0..nvars).map(|i| format!("x{i}")).collect(),
        };
        Ring::new(&names)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.names.join(","))
    }
}
