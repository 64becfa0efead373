//! The relation module of the minimal generators, plus-one generation and
//! the classification.

use serde::Serialize;

use super::serial;
use super::syzygies::SyzygySet;
use crate::error::{Error, Result};
use crate::groebner::{minimal_generators, syzygies};
use crate::polyring::{ModuleVector, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Free,
    NearlyFree,
    PogStrict,
    PogNonstrict,
    #[serde(rename = "msyzygy")]
    MSyzygy,
}

impl Classification {
    pub fn tag(self) -> &'static str {
        match self {
            Classification::Free => "free",
            Classification::NearlyFree => "nearly_free",
            Classification::PogStrict => "pog_strict",
            Classification::PogNonstrict => "pog_nonstrict",
            Classification::MSyzygy => "msyzygy",
        }
    }

    pub fn is_pog(self) -> bool {
        matches!(
            self,
            Classification::NearlyFree | Classification::PogStrict | Classification::PogNonstrict
        )
    }
}

/// Minimal generators of the relations among `ρ_1, …, ρ_m`, with shifts
/// equal to the exponents.
pub fn relation_module(syz: &SyzygySet) -> Result<Vec<ModuleVector>> {
    let ring = syz.f.ring();
    let rel = syzygies(ring, &syz.generators)?;
    minimal_generators(ring, &rel)
}

/// The unique relation `b_1ρ_1 + … + b_nρ_n + ℓρ_{n+1} = 0` of a POG
/// hypersurface.
#[derive(Clone, Debug, Serialize)]
pub struct PogStructure {
    /// Coefficients in generator order.
    #[serde(serialize_with = "serial::vector")]
    pub relation: ModuleVector,
    pub relation_degree: i64,
    /// Degree of each coefficient, `None` for zero.
    pub coefficient_degrees: Vec<Option<u32>>,
    /// Some coefficient is a nonzero linear form.
    pub strict: bool,
    /// The last generator in the given order has a nonzero linear
    /// coefficient.
    pub strict_in_given_order: bool,
    /// Generator indices, last one carrying a nonzero linear coefficient.
    pub witness_ordering: Option<Vec<usize>>,
    /// For the witness ordering: does `ℓ` divide `b_n`?
    pub ell_divides_bn: Option<bool>,
    /// A strict ordering whose last two exponents agree.
    pub equal_top_ordering: Option<Vec<usize>>,
}

impl PogStructure {
    pub fn coefficient(&self, i: usize) -> &Polynomial {
        self.relation.entry(i)
    }

    fn is_linear(&self, i: usize) -> bool {
        self.coefficient_degrees[i] == Some(1)
    }

    /// `ℓ` for `ordering` is a nonzero linear form.
    pub fn strict_for(&self, ordering: &[usize]) -> bool {
        ordering.last().is_some_and(|&l| self.is_linear(l))
    }

    /// `ℓ | b_n` for `ordering`, or `None` when `ℓ` is not a nonzero
    /// linear form.
    pub fn ell_divides_bn_for(&self, ordering: &[usize]) -> Result<Option<bool>> {
        if !self.strict_for(ordering) {
            return Ok(None);
        }
        let l = self.coefficient(ordering[ordering.len() - 1]);
        let bn = self.coefficient(ordering[ordering.len() - 2]);
        Ok(Some(bn.exact_divide(l)?.is_some()))
    }
}

fn candidate_orderings(m: usize) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..m).collect();
    let mut out = vec![id.clone()];
    for i in 0..m - 1 {
        let mut o = id.clone();
        o.swap(i, m - 1);
        out.push(o);
    }
    for l in 0..m {
        for nth in 0..m {
            if nth == l {
                continue;
            }
            let mut o: Vec<usize> = (0..m).filter(|&i| i != l && i != nth).collect();
            o.push(nth);
            o.push(l);
            out.push(o);
        }
    }
    out
}

/// The POG structure, or `None` when the relation module needs more than
/// one generator or no coefficient lies in `S_1 ∪ {0}`.
pub fn pog_structure(syz: &SyzygySet) -> Result<Option<PogStructure>> {
    if syz.m != syz.n + 1 {
        return Err(Error::Invalid(format!(
            "plus-one generation needs m = n+1 = {}, got m = {}",
            syz.n + 1,
            syz.m
        )));
    }
    let rel = relation_module(syz)?;
    if rel.len() != 1 {
        return Ok(None);
    }
    let relation = rel.into_iter().next().expect("one relation");
    let coefficient_degrees: Vec<Option<u32>> =
        relation.entries().iter().map(Polynomial::degree).collect();
    if coefficient_degrees.iter().any(|d| *d == Some(0)) {
        return Err(Error::Invalid("relation among minimal generators has a unit entry".into()));
    }
    if !coefficient_degrees.iter().any(|d| d.is_none() || *d == Some(1)) {
        return Ok(None);
    }
    let relation_degree = relation.degree().expect("nonzero relation");
    let mut pog = PogStructure {
        relation,
        relation_degree,
        coefficient_degrees,
        strict: false,
        strict_in_given_order: false,
        witness_ordering: None,
        ell_divides_bn: None,
        equal_top_ordering: None,
    };
    let m = syz.m;
    pog.strict = (0..m).any(|i| pog.is_linear(i));
    pog.strict_in_given_order = pog.is_linear(m - 1);
    let mut best: Option<((bool, bool), Vec<usize>)> = None;
    for o in candidate_orderings(m) {
        if !pog.strict_for(&o) {
            continue;
        }
        let tame_shape = pog.ell_divides_bn_for(&o)? == Some(false);
        let equal_top = syz.degrees[o[m - 1]] == syz.degrees[o[m - 2]];
        if equal_top && pog.equal_top_ordering.is_none() {
            pog.equal_top_ordering = Some(o.clone());
        }
        let key = (tame_shape, equal_top);
        if best.as_ref().is_none_or(|(k, _)| key > *k) {
            best = Some((key, o));
        }
    }
    if let Some((key, o)) = best {
        pog.ell_divides_bn = Some(!key.0);
        pog.witness_ordering = Some(o);
    }
    Ok(Some(pog))
}

/// Classify from the exponents and, when `m = n+1`, the relation module.
pub fn classify(syz: &SyzygySet) -> Result<(Classification, Option<PogStructure>)> {
    if syz.m == syz.n {
        return Ok((Classification::Free, None));
    }
    if syz.m != syz.n + 1 {
        return Ok((Classification::MSyzygy, None));
    }
    let Some(pog) = pog_structure(syz)? else {
        return Ok((Classification::MSyzygy, None));
    };
    let s = &syz.sorted_degrees;
    let class = if !pog.strict {
        Classification::PogNonstrict
    } else if s[syz.n - 1] == s[syz.n] && pog.equal_top_ordering.is_some() {
        Classification::NearlyFree
    } else {
        Classification::PogStrict
    };
    Ok((class, Some(pog)))
}
