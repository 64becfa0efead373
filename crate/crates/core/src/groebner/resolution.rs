use num_bigint::BigInt;

use super::minimal::select_minimal;
use super::order::{ModuleOrder, ModuleOrderKind};
use super::syzygy::syzygy_basis;
use super::vector::{self, Vector};
use crate::error::{Error, Result};
use crate::polyring::{ModuleVector, MonomialOrder, PolyMatrix, Polynomial, Ring};

/// Graded free resolution `F_0 ← F_1 ← … ← F_k` of a cokernel.
///
/// `shifts[i]` lists the twists of `F_i = ⊕ S(a)`, so `S(−3)` appears as
/// `−3`; `maps[i]` is the matrix of `F_{i+1} → F_i`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    pub shifts: Vec<Vec<i64>>,
    pub maps: Vec<PolyMatrix>,
}

impl Resolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Twists of every step, sorted decreasingly.
    pub fn betti_shifts(&self) -> Vec<Vec<i64>> {
        self.shifts
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(Vec::len).collect()
    }

    /// Consecutive maps compose to zero.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if w[0].cols() == 0 || w[1].cols() == 0 {
                continue;
            }
            if !w[0].checked_mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No map has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| !m.has_constant_entry())
    }
}

fn matrix_of(ring: &Ring, rank: usize, cols: &[Vector], shifts: &[i64]) -> Result<PolyMatrix> {
    let vs: Vec<ModuleVector> = cols
        .iter()
        .map(|v| vector::to_module(v, ring, shifts, 0))
        .collect();
    PolyMatrix::from_columns(ring, rank, &vs)
}

/// Minimal graded free resolution of `F/M`, where `M` is generated by
/// `gens` inside the free module `F` they live in, truncated after
/// `max_length` maps. For rank-one input this resolves `S/I`.
pub fn minimal_free_resolution(
    ring: &Ring,
    gens: &[ModuleVector],
    max_length: usize,
) -> Result<Resolution> {
    let Some(first) = gens.first() else {
        return Err(Error::Invalid("cannot resolve without an ambient module".into()));
    };
    let ambient = first.shifts().to_vec();
    let mut shifts = vec![ambient.iter().map(|s| -s).collect::<Vec<_>>()];
    let mut maps = Vec::new();
    let mut deg_order = ModuleOrder::new(
        MonomialOrder::DegRevLex,
        ModuleOrderKind::TermOverPosition,
        ambient.clone(),
    );
    let mut current: Vec<Vector> = Vec::with_capacity(gens.len());
    for g in gens {
        if g.shifts() != ambient.as_slice() {
            return Err(Error::MixedRanks(g.rank(), ambient.len()));
        }
        current.push(vector::from_module(g, &deg_order));
    }
    let mut current_shifts = ambient;
    while maps.len() < max_length {
        let sel = select_minimal(&current, &deg_order, ring.nvars())?;
        let mut picked: Vec<(usize, Vector)> = sel.chosen.into_iter().zip(sel.reduced).collect();
        picked.sort_by_key(|e| e.0);
        let mins: Vec<Vector> = picked.into_iter().map(|e| e.1).collect();
        if mins.is_empty() {
            break;
        }
        maps.push(matrix_of(ring, current_shifts.len(), &mins, &current_shifts)?);
        let degrees: Vec<i64> = mins
            .iter()
            .map(|v| deg_order.weighted_degree(&v[0].m, v[0].c))
            .collect();
        shifts.push(degrees.iter().map(|d| -d).collect());
        if maps.len() == max_length {
            break;
        }
        let tracked: Vec<(Vector, BigInt)> = mins.into_iter().map(|v| (v, BigInt::from(1))).collect();
        let (syz, _) = syzygy_basis(&tracked, &current_shifts, MonomialOrder::DegRevLex);
        current_shifts = degrees;
        deg_order = ModuleOrder::new(
            MonomialOrder::DegRevLex,
            ModuleOrderKind::TermOverPosition,
            current_shifts.clone(),
        );
        current = syz
            .into_iter()
            .map(|mut v| {
                vector::sort_terms(&mut v, &deg_order);
                v
            })
            .collect();
    }
    Ok(Resolution {
        ring: ring.clone(),
        shifts,
        maps,
    })
}

/// Minimal resolution of `S/I`.
pub fn resolve_ideal(ring: &Ring, gens: &[Polynomial], max_length: usize) -> Result<Resolution> {
    let vs: Vec<ModuleVector> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ModuleVector::unshifted(vec![g.clone()]))
        .collect::<Result<_>>()?;
    if vs.is_empty() {
        return Ok(Resolution {
            ring: ring.clone(),
            shifts: vec![vec![0]],
            maps: Vec::new(),
        });
    }
    minimal_free_resolution(ring, &vs, max_length)
}
