//! The map `v(ρ) = det M(ρ̂, ρ) / f`, the ideals `I(ρ̂)` and `B(f, ρ̂)`, and
//! tameness.

use rayon::prelude::*;
use serde::Serialize;

use super::serial;
use super::syzygies::SyzygySet;
use crate::error::{Error, Result};
use crate::groebner::{minimal_ideal_generators, Ideal};
use crate::invariants::{height, is_saturated, Height};
use crate::polyring::{combinations, euler_vector, ModuleVector, PolyMatrix, Polynomial};

/// `v` for a fixed subset `ρ̂`, stored as the cofactors of the last row of
/// `M(ρ̂, ρ)`.
#[derive(Clone, Debug)]
pub struct BourbakiMap {
    f: Polynomial,
    rows: Vec<Vec<Polynomial>>,
    cofactors: Vec<Polynomial>,
}

impl BourbakiMap {
    pub fn new(f: &Polynomial, subset: &[ModuleVector]) -> Result<BourbakiMap> {
        let n1 = f.ring().nvars();
        if subset.len() + 2 != n1 {
            return Err(Error::InvalidSubset(format!(
                "expected {} syzygies, got {}",
                n1 - 2,
                subset.len()
            )));
        }
        let mut rows = vec![euler_vector(f.ring()).into_entries()];
        for s in subset {
            if s.rank() != n1 {
                return Err(Error::MixedRanks(s.rank(), n1));
            }
            rows.push(s.entries().to_vec());
        }
        let top = PolyMatrix::from_rows(rows.clone())?;
        let all_rows: Vec<usize> = (0..n1 - 1).collect();
        let cofactors = (0..n1)
            .map(|j| {
                let cols: Vec<usize> = (0..n1).filter(|&c| c != j).collect();
                let minor = top.submatrix(&all_rows, &cols).determinant()?;
                Ok(if (n1 - 1 + j) % 2 == 0 { minor } else { -minor })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BourbakiMap {
            f: f.clone(),
            rows,
            cofactors,
        })
    }

    /// `M(ρ̂, ρ)`, with the Euler row first and `ρ` last.
    pub fn matrix(&self, rho: &ModuleVector) -> Result<PolyMatrix> {
        let mut rows = self.rows.clone();
        rows.push(rho.entries().to_vec());
        PolyMatrix::from_rows(rows)
    }

    /// `det M(ρ̂, ρ)`, by expansion along the last row.
    pub fn determinant(&self, rho: &ModuleVector) -> Result<Polynomial> {
        if rho.rank() != self.cofactors.len() {
            return Err(Error::MixedRanks(rho.rank(), self.cofactors.len()));
        }
        let mut acc = Polynomial::zero(self.f.ring());
        for (a, c) in rho.entries().iter().zip(&self.cofactors) {
            if !a.is_zero() {
                acc = acc + a.checked_mul(c)?;
            }
        }
        Ok(acc)
    }

    /// `v(ρ)`; fails when `f` does not divide the determinant, which
    /// happens only if `ρ` is not a syzygy.
    pub fn apply(&self, rho: &ModuleVector) -> Result<Polynomial> {
        let det = self.determinant(rho)?;
        det.exact_divide(&self.f)?.ok_or_else(|| {
            Error::Invalid(format!("determinant for {rho} is not divisible by f"))
        })
    }
}

/// Everything the map `v` determines for one subset `ρ̂`.
#[derive(Clone, Debug, Serialize)]
pub struct BourbakiResult {
    pub subset: Vec<usize>,
    pub subset_names: Vec<String>,
    pub subset_degrees: Vec<u32>,
    /// `rank M(ρ̂)′ = n−1`, i.e. some maximal minor is nonzero.
    pub rank_ok: bool,
    /// `δ = Σ_{ρ̂} d_i − (d−1)`.
    pub delta: i64,
    #[serde(serialize_with = "serial::ideal")]
    pub minors_ideal: Ideal,
    pub minors_height: Height,
    pub tame: bool,
    /// Generators outside `ρ̂`, in generator order.
    pub outside: Vec<usize>,
    /// `v(ρ_j)` for each `j` in `outside`.
    #[serde(serialize_with = "serial::polys")]
    pub bourbaki_generators: Vec<Polynomial>,
    /// Each `v(ρ_j)` is zero or homogeneous of degree `d_j + δ`.
    pub degrees_ok: bool,
    /// `v` kills `E` and every `ρ_i ∈ ρ̂`.
    pub vanishing_ok: bool,
    #[serde(serialize_with = "serial::polys")]
    pub bourbaki_ideal: Vec<Polynomial>,
    /// Reduced Gröbner basis of `B(f, ρ̂)`.
    #[serde(serialize_with = "serial::polys")]
    pub bourbaki_basis: Vec<Polynomial>,
    #[serde(serialize_with = "serial::polys")]
    pub minimal_generators: Vec<Polynomial>,
    pub minimal_generator_degrees: Vec<u32>,
    pub is_zero: bool,
    pub is_unit: bool,
    pub bourbaki_height: Height,
    /// `None` when saturation was not requested.
    pub saturated: Option<bool>,
    pub complete_intersection_codim2: bool,
}

impl BourbakiResult {
    pub fn ideal(&self) -> Result<Ideal> {
        let ring = self.minors_ideal.ring();
        Ideal::new(ring, self.bourbaki_ideal.clone())
    }
}

fn subset_vectors(syz: &SyzygySet, subset: &[usize]) -> Result<Vec<ModuleVector>> {
    if subset.len() + 1 != syz.n {
        return Err(Error::InvalidSubset(format!(
            "expected {} indices, got {}",
            syz.n - 1,
            subset.len()
        )));
    }
    let mut seen = Vec::new();
    for &i in subset {
        if i >= syz.m {
            return Err(Error::InvalidSubset(format!(
                "index {} out of range 1..={}",
                i + 1,
                syz.m
            )));
        }
        if seen.contains(&i) {
            return Err(Error::InvalidSubset(format!("index {} repeated", i + 1)));
        }
        seen.push(i);
    }
    Ok(subset.iter().map(|&i| syz.generators[i].clone()).collect())
}

/// `I(ρ̂)`, generated by the maximal minors of the matrix with rows `ρ̂`.
pub fn minors_ideal(syz: &SyzygySet, subset: &[usize]) -> Result<Ideal> {
    let vs = subset_vectors(syz, subset)?;
    let ring = syz.f.ring();
    if vs.is_empty() {
        return Ok(Ideal::unit(ring));
    }
    let m = PolyMatrix::from_rows(vs.iter().map(|v| v.entries().to_vec()).collect())?;
    Ideal::new(ring, m.minors(vs.len())?)
}

/// Tameness of `f` with respect to `ρ̂`: `height I(ρ̂) ≥ 2`.
#[derive(Clone, Debug, Serialize)]
pub struct SubsetVerdict {
    pub subset: Vec<usize>,
    pub degree_sum: u32,
    pub rank_ok: bool,
    pub minors_height: Height,
    pub tame: bool,
}

pub fn subset_verdict(syz: &SyzygySet, subset: &[usize]) -> Result<SubsetVerdict> {
    let minors = minors_ideal(syz, subset)?;
    let h = height(&minors)?;
    Ok(SubsetVerdict {
        subset: subset.to_vec(),
        degree_sum: subset.iter().map(|&i| syz.degrees[i]).sum(),
        rank_ok: !minors.is_zero(),
        minors_height: h,
        tame: h.value >= 2,
    })
}

pub fn is_tame(syz: &SyzygySet, subset: &[usize]) -> Result<bool> {
    Ok(subset_verdict(syz, subset)?.tame)
}

/// Build `B(f, ρ̂)` and decide tameness. Saturation of `B` is tested when
/// `check_saturation` is set.
pub fn bourbaki(syz: &SyzygySet, subset: &[usize], check_saturation: bool) -> Result<BourbakiResult> {
    let vs = subset_vectors(syz, subset)?;
    let ring = syz.f.ring();
    let map = BourbakiMap::new(&syz.f, &vs)?;
    let verdict = subset_verdict(syz, subset)?;
    let minors = minors_ideal(syz, subset)?;
    let subset_degrees: Vec<u32> = subset.iter().map(|&i| syz.degrees[i]).collect();
    let delta = subset_degrees.iter().map(|&d| d as i64).sum::<i64>() - (syz.d as i64 - 1);

    let mut vanishing_ok = map.determinant(&euler_vector(ring))?.is_zero();
    for v in &vs {
        vanishing_ok &= map.determinant(v)?.is_zero();
    }
    let outside: Vec<usize> = (0..syz.m).filter(|i| !subset.contains(i)).collect();
    let images: Vec<Polynomial> = outside
        .iter()
        .map(|&j| map.apply(&syz.generators[j]))
        .collect::<Result<_>>()?;
    let degrees_ok = outside.iter().zip(&images).all(|(&j, p)| {
        p.is_zero()
            || (p.is_homogeneous() && p.degree().map(|e| e as i64) == Some(syz.degrees[j] as i64 + delta))
    });
    let nonzero: Vec<Polynomial> = images.iter().filter(|p| !p.is_zero()).cloned().collect();
    let b = Ideal::new(ring, nonzero.clone())?;
    let gb = b.groebner_basis()?;
    let basis = gb.polynomials();
    let is_zero = b.is_zero();
    let is_unit = gb.is_everything();
    let minimal = if is_unit {
        vec![Polynomial::one(ring)]
    } else {
        minimal_ideal_generators(ring, &nonzero)?
    };
    let minimal_degrees: Vec<u32> = {
        let mut v: Vec<u32> = minimal.iter().filter_map(Polynomial::degree).collect();
        v.sort_unstable();
        v
    };
    let bh = height(&b)?;
    let saturated = if !check_saturation {
        None
    } else if is_zero || is_unit {
        Some(true)
    } else {
        Some(is_saturated(&b)?)
    };
    let complete_intersection_codim2 = !is_unit && minimal.len() == 2 && bh.value == 2;
    Ok(BourbakiResult {
        subset: subset.to_vec(),
        subset_names: subset.iter().map(|&i| syz.names[i].clone()).collect(),
        subset_degrees,
        rank_ok: verdict.rank_ok,
        delta,
        minors_ideal: minors,
        minors_height: verdict.minors_height,
        tame: verdict.tame,
        outside,
        bourbaki_generators: images,
        degrees_ok,
        vanishing_ok,
        bourbaki_ideal: nonzero,
        bourbaki_basis: basis,
        minimal_generators: minimal,
        minimal_generator_degrees: minimal_degrees,
        is_zero,
        is_unit,
        bourbaki_height: bh,
        saturated,
        complete_intersection_codim2,
    })
}

/// Outcome of scanning `(n−1)`-subsets of the generators.
#[derive(Clone, Debug, Serialize)]
pub struct TameScan {
    pub verdicts: Vec<SubsetVerdict>,
    pub total_subsets: usize,
    pub complete: bool,
    /// Minimal `Σ_{ρ̂} d_i` over tame subsets.
    pub b_of_v: Option<u32>,
    /// `found`, `no_tame_subset` (every subset tested) or `inconclusive`
    /// (the limit was reached first).
    pub status: &'static str,
}

/// Test subsets in order of increasing degree sum, at most `limit` of them.
/// Subsets of equal degree sum are tested together; the scan stops after
/// the first such level that contains a tame subset.
pub fn tame_scan(syz: &SyzygySet, limit: Option<usize>) -> Result<TameScan> {
    let degree_sum = |s: &[usize]| s.iter().map(|&i| syz.degrees[i]).sum::<u32>();
    let mut subsets = combinations(syz.m, syz.n - 1);
    subsets.sort_by_key(|s| (degree_sum(s), s.clone()));
    let total = subsets.len();
    let take = limit.map_or(total, |l| l.min(total));
    let mut verdicts: Vec<SubsetVerdict> = Vec::with_capacity(take);
    let mut start = 0;
    while start < take && !verdicts.iter().any(|v| v.tame) {
        let level = degree_sum(&subsets[start]);
        let end = subsets[start..take]
            .iter()
            .position(|s| degree_sum(s) != level)
            .map_or(take, |p| start + p);
        let batch: Vec<SubsetVerdict> = subsets[start..end]
            .par_iter()
            .map(|s| subset_verdict(syz, s))
            .collect::<Result<_>>()?;
        verdicts.extend(batch);
        start = end;
    }
    let b_of_v = verdicts.iter().filter(|v| v.tame).map(|v| v.degree_sum).min();
    let complete = verdicts.len() == total;
    let status = match (b_of_v, complete) {
        (Some(_), _) => "found",
        (None, true) => "no_tame_subset",
        (None, false) => "inconclusive",
    };
    Ok(TameScan {
        verdicts,
        total_subsets: total,
        complete,
        b_of_v,
        status,
    })
}
