//! Syzygies by lifting. Buchberger completion runs on `(g_i | e_i)` in an
//! order where the `g`-block dominates. Every reduction whose `g`-part
//! vanishes leaves a syzygy in the `e`-block; those remainders are kept
//! aside rather than completed, and together they generate the syzygy
//! module.

use num_bigint::BigInt;

use super::engine::Engine;
use super::order::{ModuleOrder, ModuleOrderKind};
use super::vector::{self, Term, Vector};
use crate::error::{Error, Result};
use crate::polyring::{ModuleVector, Monomial, MonomialOrder, Polynomial, Ring};

/// Syzygy generators of `gens` (each multiplied by its tracking coefficient).
///
/// `gens[i] = (v, c)` stands for the vector `v` of the ambient module with
/// shifts `ambient`, and the returned syzygies `σ` satisfy
/// `Σ σ_i · (v_i / c) = 0`. Result vectors live in a free module of rank
/// `gens.len()` with the returned shifts, in increasing order.
pub(crate) fn syzygy_basis(
    gens: &[(Vector, BigInt)],
    ambient: &[i64],
    monomial: MonomialOrder,
) -> (Vec<Vector>, Vec<i64>) {
    let r = ambient.len();
    let amb_order = ModuleOrder::new(monomial, ModuleOrderKind::PositionOverTerm, ambient.to_vec());
    let degrees: Vec<i64> = gens
        .iter()
        .map(|(v, _)| {
            if v.is_empty() {
                0
            } else {
                vector::max_weighted_degree(v, &amb_order)
            }
        })
        .collect();
    let mut shifts = ambient.to_vec();
    shifts.extend_from_slice(&degrees);
    let order = ModuleOrder::new(monomial, ModuleOrderKind::Elimination { ambient: r }, shifts);
    let mut engine = Engine::parking(order.clone(), r as u32);
    for (i, (v, c)) in gens.iter().enumerate() {
        let mut w = v.clone();
        w.push(Term {
            m: Monomial::ONE,
            c: (r + i) as u32,
            k: c.clone(),
        });
        vector::sort_terms(&mut w, &order);
        engine.add_generator(w);
    }
    engine.complete(None);
    let mut parked = engine.parked().to_vec();
    parked.sort_by(|a, b| order.cmp((&a[0].m, a[0].c), (&b[0].m, b[0].c)));
    parked.dedup();
    let out = parked
        .into_iter()
        .map(|v| {
            v.into_iter()
                .map(|t| Term {
                    m: t.m,
                    c: t.c - r as u32,
                    k: t.k,
                })
                .collect()
        })
        .collect();
    (out, degrees)
}

fn ambient_shifts(gens: &[ModuleVector]) -> Result<Vec<i64>> {
    let shifts = gens[0].shifts().to_vec();
    for g in gens {
        if g.rank() != shifts.len() {
            return Err(Error::MixedRanks(g.rank(), shifts.len()));
        }
        if g.shifts() != shifts.as_slice() {
            return Err(Error::DimensionMismatch(
                "generators live in differently graded free modules".into(),
            ));
        }
    }
    Ok(shifts)
}

/// A homogeneous generating set of the module of
/// relations `{(a_1,…,a_k) : Σ a_i·gens_i = 0}`, with shifts equal to the
/// degrees of the generators.
pub fn syzygies(ring: &Ring, gens: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let shifts = ambient_shifts(gens)?;
    let order = ModuleOrder::new(
        MonomialOrder::DegRevLex,
        ModuleOrderKind::PositionOverTerm,
        shifts.clone(),
    );
    let tracked: Vec<(Vector, BigInt)> = gens
        .iter()
        .map(|g| {
            let indexed: Vec<(u32, &Polynomial)> = g
                .entries()
                .iter()
                .enumerate()
                .map(|(i, p)| (i as u32, p))
                .collect();
            vector::integer_terms(&indexed, &order)
        })
        .collect();
    let (basis, degrees) = syzygy_basis(&tracked, &shifts, MonomialOrder::DegRevLex);
    Ok(basis
        .iter()
        .map(|v| vector::to_module(v, ring, &degrees, 0))
        .collect())
}

/// Syzygies of a list of polynomials, i.e. of the rank-one vectors they form.
pub fn polynomial_syzygies(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<ModuleVector>> {
    let vs: Vec<ModuleVector> = gens
        .iter()
        .map(|g| ModuleVector::unshifted(vec![g.clone()]))
        .collect::<Result<_>>()?;
    syzygies(ring, &vs)
}
