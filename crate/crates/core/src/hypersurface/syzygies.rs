//! Minimal generators of `D₀(f)`.

use serde::Serialize;

use super::serial;
use crate::error::{Error, Result};
use crate::groebner::{minimal_generating_set, polynomial_syzygies};
use crate::invariants::{is_cone, is_reduced};
use crate::polyring::{ModuleVector, Polynomial};

/// A minimal homogeneous generating set `ρ_1, …, ρ_m` of `D₀(f)`.
#[derive(Clone, Debug, Serialize)]
pub struct SyzygySet {
    #[serde(serialize_with = "serial::poly")]
    pub f: Polynomial,
    pub d: u32,
    /// Projective dimension: the ring has `n+1` variables.
    pub n: usize,
    pub names: Vec<String>,
    #[serde(serialize_with = "serial::vectors")]
    pub generators: Vec<ModuleVector>,
    /// Degrees in generator order.
    pub degrees: Vec<u32>,
    pub sorted_degrees: Vec<u32>,
    pub m: usize,
    /// The first `declared` generators were supplied by the caller.
    pub declared: usize,
    /// Set when `d < 3`.
    pub low_degree: bool,
}

impl SyzygySet {
    pub fn mdr(&self) -> u32 {
        self.sorted_degrees[0]
    }

    pub fn is_free(&self) -> bool {
        self.m == self.n
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Validate `f` as a reduced, non-conical hypersurface.
pub(crate) fn check_input(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(f.to_string()));
    }
    if f.ring().nvars() < 3 {
        return Err(Error::Invalid(format!(
            "need at least 3 variables, got {}",
            f.ring().nvars()
        )));
    }
    if !is_reduced(f)? {
        return Err(Error::NotReduced);
    }
    if is_cone(f)? {
        return Err(Error::Cone);
    }
    Ok(())
}

/// Degree of a homogeneous unshifted syzygy.
pub(crate) fn vector_degree(v: &ModuleVector) -> u32 {
    v.degree().expect("nonzero syzygy") as u32
}

fn computed_candidates(f: &Polynomial) -> Result<Vec<ModuleVector>> {
    polynomial_syzygies(f.ring(), &f.gradient())?
        .into_iter()
        .map(|s| ModuleVector::unshifted(s.into_entries()))
        .collect()
}

pub fn jacobian_syzygies(f: &Polynomial) -> Result<SyzygySet> {
    jacobian_syzygies_with(f, &[])
}

/// Like [`jacobian_syzygies`], but the `declared` vectors are placed first.
/// They must be syzygies that extend to a minimal generating set; the rest
/// of the set is completed from computed generators.
pub fn jacobian_syzygies_with(
    f: &Polynomial,
    declared: &[(String, ModuleVector)],
) -> Result<SyzygySet> {
    check_input(f)?;
    let ring = f.ring();
    let n1 = ring.nvars();
    let grad = f.gradient();
    for (name, v) in declared {
        let bad = |reason: &str| Error::BadDeclaredSyzygy {
            name: name.clone(),
            reason: reason.into(),
        };
        if v.rank() != n1 {
            return Err(bad(&format!("expected {n1} entries, got {}", v.rank())));
        }
        if v.ring() != ring {
            return Err(bad("different ring"));
        }
        if v.is_zero() {
            return Err(bad("zero vector"));
        }
        if v.shifts().iter().any(|&s| s != 0) || !v.is_homogeneous() {
            return Err(bad("not homogeneous"));
        }
        if !v.dot(&grad)?.is_zero() {
            return Err(bad("not a syzygy of the partial derivatives"));
        }
    }
    let mut cands: Vec<ModuleVector> = declared.iter().map(|(_, v)| v.clone()).collect();
    cands.extend(computed_candidates(f)?);
    let chosen = minimal_generating_set(ring, &cands)?;
    let k = declared.len();
    for (i, (name, _)) in declared.iter().enumerate() {
        if !chosen.iter().any(|e| e.0 == i) {
            return Err(Error::BadDeclaredSyzygy {
                name: name.clone(),
                reason: "not part of a minimal generating set together with the others".into(),
            });
        }
    }
    let mut rest: Vec<(usize, ModuleVector)> = chosen.into_iter().filter(|e| e.0 >= k).collect();
    rest.sort_by_key(|e| (vector_degree(&e.1), e.0));
    let mut names: Vec<String> = declared.iter().map(|(n, _)| n.clone()).collect();
    let mut generators: Vec<ModuleVector> = declared.iter().map(|(_, v)| v.clone()).collect();
    let mut serial_no = 0;
    for (_, v) in rest {
        serial_no += 1;
        let mut name = format!("rho{serial_no}");
        while names.contains(&name) {
            serial_no += 1;
            name = format!("rho{serial_no}");
        }
        names.push(name);
        generators.push(v);
    }
    let degrees: Vec<u32> = generators.iter().map(vector_degree).collect();
    let mut sorted_degrees = degrees.clone();
    sorted_degrees.sort_unstable();
    let d = f.degree().expect("nonzero");
    Ok(SyzygySet {
        f: f.clone(),
        d,
        n: n1 - 1,
        m: generators.len(),
        names,
        generators,
        degrees,
        sorted_degrees,
        declared: k,
        low_degree: d < 3,
    })
}
