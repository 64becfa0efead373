//! Serde helpers: polynomials travel as canonical strings.

use serde::ser::{SerializeSeq, Serializer};

use crate::groebner::Ideal;
use crate::polyring::{ModuleVector, Polynomial};

pub(crate) fn poly<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

pub(crate) fn polys<S: Serializer>(ps: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(ps.len()))?;
    for p in ps {
        seq.serialize_element(&p.to_string())?;
    }
    seq.end()
}

pub(crate) fn vector<S: Serializer>(v: &ModuleVector, s: S) -> Result<S::Ok, S::Error> {
    polys(v.entries(), s)
}

pub(crate) fn vectors<S: Serializer>(vs: &[ModuleVector], s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = vs
        .iter()
        .map(|v| v.entries().iter().map(ToString::to_string).collect())
        .collect();
    s.collect_seq(rows)
}

pub(crate) fn ideal<S: Serializer>(i: &Ideal, s: S) -> Result<S::Ok, S::Error> {
    polys(i.generators(), s)
}
