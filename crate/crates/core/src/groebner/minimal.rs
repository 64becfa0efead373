//! Minimal homogeneous generators and minimal presentations.

use std::collections::HashMap;

use super::order::{ModuleOrder, ModuleOrderKind};
use super::syzygy::syzygies;
use super::vector::{self, Term, Vector};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Row};
use crate::polyring::{ModuleVector, Monomial, MonomialOrder, PolyMatrix, Polynomial, Rational, Ring};

pub(crate) struct Selection {
    /// Indices into the candidate list, in acceptance order.
    pub chosen: Vec<usize>,
    /// For each chosen candidate, a primitive representative with every
    /// pivot of the lower span cleared. Together they generate the same
    /// module as the chosen candidates.
    pub reduced: Vec<Vector>,
}

/// Column indexing of module terms for the linear algebra below.
#[derive(Default)]
struct Columns {
    index: HashMap<(Monomial, u32), usize>,
    keys: Vec<(Monomial, u32)>,
}

impl Columns {
    fn row_of(&mut self, v: &[Term]) -> Row {
        let mut row: Row = v
            .iter()
            .map(|t| {
                let col = *self.index.entry((t.m, t.c)).or_insert_with(|| {
                    self.keys.push((t.m, t.c));
                    self.keys.len() - 1
                });
                (col, t.k.clone())
            })
            .collect();
        row.sort_by_key(|e| e.0);
        row
    }

    fn vector_of(&self, row: &Row, order: &ModuleOrder) -> Vector {
        let mut v: Vector = row
            .iter()
            .map(|(col, k)| {
                let (m, c) = self.keys[*col];
                Term { m, c, k: k.clone() }
            })
            .collect();
        vector::sort_terms(&mut v, order);
        v
    }
}

/// Pick a minimal generating subset, scanning degrees upwards and keeping
/// the input order inside each degree. A candidate of degree `k` is kept
/// iff it is not in the span of the degree-`k` multiples of the candidates
/// kept so far.
pub(crate) fn select_minimal(cands: &[Vector], order: &ModuleOrder, nvars: usize) -> Result<Selection> {
    let mut idx: Vec<(i64, usize)> = Vec::new();
    for (i, v) in cands.iter().enumerate() {
        if v.is_empty() {
            continue;
        }
        if !vector::is_homogeneous(v, order) {
            return Err(Error::NotHomogeneous(format!("generator {}", i + 1)));
        }
        idx.push((order.weighted_degree(&v[0].m, v[0].c), i));
    }
    idx.sort();
    let mut cols = Columns::default();
    let mut chosen: Vec<(usize, i64)> = Vec::new();
    let mut reduced: Vec<Vector> = Vec::new();
    let mut start = 0;
    while start < idx.len() {
        let deg = idx[start].0;
        let end = idx[start..].iter().position(|e| e.0 != deg).map_or(idx.len(), |p| start + p);
        let mut span = Echelon::new();
        for (&(_, e), red) in chosen.iter().zip(&reduced) {
            for m in Monomial::all_of_degree(nvars, (deg - e) as u32) {
                span.insert(cols.row_of(&vector::mul_monomial(red, &m)));
            }
        }
        for &(_, i) in &idx[start..end] {
            let red = span.reduce_full(cols.row_of(&cands[i]));
            if !red.is_empty() {
                span.insert(red.clone());
                chosen.push((i, deg));
                reduced.push(cols.vector_of(&red, order));
            }
        }
        start = end;
    }
    Ok(Selection {
        chosen: chosen.into_iter().map(|(i, _)| i).collect(),
        reduced,
    })
}

fn degree_order(shifts: Vec<i64>) -> ModuleOrder {
    ModuleOrder::new(
        MonomialOrder::DegRevLex,
        ModuleOrderKind::TermOverPosition,
        shifts,
    )
}

fn module_selection(ring: &Ring, gens: &[ModuleVector]) -> Result<Option<(Selection, Vec<i64>)>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    let order = degree_order(first.shifts().to_vec());
    let mut vs = Vec::with_capacity(gens.len());
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if g.shifts() != first.shifts() {
            return Err(Error::MixedRanks(g.rank(), first.rank()));
        }
        vs.push(vector::from_module(g, &order));
    }
    Ok(Some((select_minimal(&vs, &order, ring.nvars())?, first.shifts().to_vec())))
}

/// Positions of a minimal generating subset of `gens`.
pub fn minimal_generator_indices(ring: &Ring, gens: &[ModuleVector]) -> Result<Vec<usize>> {
    Ok(module_selection(ring, gens)?.map_or_else(Vec::new, |(sel, _)| sel.chosen))
}

/// Minimal generators of the submodule generated by `gens`, each paired
/// with the position of the input it replaces, ordered by that position.
/// A generator is the input reduced modulo the lower-degree part and the
/// earlier inputs of its degree, so it is usually much sparser.
pub fn minimal_generating_set(ring: &Ring, gens: &[ModuleVector]) -> Result<Vec<(usize, ModuleVector)>> {
    let Some((sel, shifts)) = module_selection(ring, gens)? else {
        return Ok(Vec::new());
    };
    let mut out: Vec<(usize, ModuleVector)> = sel
        .chosen
        .into_iter()
        .zip(sel.reduced)
        .map(|(i, v)| (i, vector::to_module(&v, ring, &shifts, 0)))
        .collect();
    out.sort_by_key(|e| e.0);
    Ok(out)
}

/// A minimal generating set of the submodule generated by `gens`.
pub fn minimal_generators(ring: &Ring, gens: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    Ok(minimal_generating_set(ring, gens)?.into_iter().map(|e| e.1).collect())
}

/// A minimal generating subset of the homogeneous ideal generated by `gens`.
pub fn minimal_ideal_generators(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let order = degree_order(vec![0]);
    let mut vs = Vec::with_capacity(gens.len());
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        vs.push(vector::from_poly(g, 0, &order));
    }
    let mut idx = select_minimal(&vs, &order, ring.nvars())?.chosen;
    idx.sort_unstable();
    Ok(idx.into_iter().map(|i| gens[i].clone()).collect())
}

/// A graded module given by generators in degrees `generator_shifts` modulo
/// the columns of `relations`.
#[derive(Clone, Debug)]
pub struct Presentation {
    ring: Ring,
    pub generator_shifts: Vec<i64>,
    pub relations: PolyMatrix,
    pub minimal: bool,
    /// For each surviving generator, its position in the presentation this
    /// one was derived from.
    pub generator_indices: Vec<usize>,
}

fn column_degree(col: &[Polynomial], shifts: &[i64]) -> Option<Option<i64>> {
    let mut deg = None;
    for (p, s) in col.iter().zip(shifts) {
        if p.is_zero() {
            continue;
        }
        if !p.is_homogeneous() {
            return None;
        }
        let d = p.degree().expect("nonzero") as i64 + s;
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return None,
            _ => {}
        }
    }
    Some(deg)
}

impl Presentation {
    pub fn new(ring: &Ring, generator_shifts: Vec<i64>, relations: PolyMatrix) -> Result<Presentation> {
        if relations.rows() != generator_shifts.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} generators but {} relation rows",
                generator_shifts.len(),
                relations.rows()
            )));
        }
        for j in 0..relations.cols() {
            if column_degree(&relations.column(j), &generator_shifts).is_none() {
                return Err(Error::NotHomogeneous(format!("relation {}", j + 1)));
            }
        }
        let minimal = !relations.has_constant_entry();
        let generator_indices = (0..generator_shifts.len()).collect();
        Ok(Presentation {
            ring: ring.clone(),
            generator_shifts,
            relations,
            minimal,
            generator_indices,
        })
    }

    /// The submodule generated by `gens`, presented by its generators and
    /// all their relations.
    pub fn of_module(ring: &Ring, gens: &[ModuleVector]) -> Result<Presentation> {
        let shifts: Vec<i64> = gens
            .iter()
            .map(|g| {
                g.degree()
                    .ok_or_else(|| Error::NotHomogeneous("generator is zero or inhomogeneous".into()))
            })
            .collect::<Result<_>>()?;
        let rel = syzygies(ring, gens)?;
        let m = PolyMatrix::from_columns(ring, gens.len(), &rel)?;
        Presentation::new(ring, shifts, m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn num_generators(&self) -> usize {
        self.generator_shifts.len()
    }

    pub fn relation_degrees(&self) -> Vec<i64> {
        (0..self.relations.cols())
            .filter_map(|j| column_degree(&self.relations.column(j), &self.generator_shifts).flatten())
            .collect()
    }

    /// Eliminate every generator that some relation expresses through the
    /// others (a nonzero constant entry), lowest relation degree first, then
    /// drop redundant relations.
    pub fn minimalize(&self) -> Result<Presentation> {
        let mut shifts = self.generator_shifts.clone();
        let mut origin = self.generator_indices.clone();
        let mut cols: Vec<Vec<Polynomial>> = (0..self.relations.cols())
            .map(|j| self.relations.column(j))
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect();
        loop {
            let degree_of = |c: &Vec<Polynomial>, shifts: &[i64]| {
                column_degree(c, shifts).flatten().unwrap_or(i64::MAX)
            };
            let pivot = cols
                .iter()
                .enumerate()
                .filter_map(|(j, c)| {
                    c.iter()
                        .position(|p| p.is_constant() && !p.is_zero())
                        .map(|r| (degree_of(c, &shifts), j, r))
                })
                .min();
            let Some((_, j, r)) = pivot else { break };
            let pc = cols.swap_remove(j);
            let unit: Rational = pc[r].terms()[0].1.clone();
            for c in cols.iter_mut() {
                if c[r].is_zero() {
                    continue;
                }
                let factor = c[r].scale(&unit.recip());
                for (e, p) in c.iter_mut().zip(&pc) {
                    *e = &*e - &(&factor * p);
                }
                debug_assert!(c[r].is_zero());
            }
            for c in cols.iter_mut() {
                c.remove(r);
            }
            shifts.remove(r);
            origin.remove(r);
            cols.retain(|c| c.iter().any(|p| !p.is_zero()));
        }
        let rank = shifts.len();
        let relations = if rank == 0 || cols.is_empty() {
            PolyMatrix::zero(&self.ring, rank, 0)
        } else {
            let vs: Vec<ModuleVector> = cols
                .into_iter()
                .map(|c| ModuleVector::new(c, shifts.clone()))
                .collect::<Result<_>>()?;
            let kept = minimal_generators(&self.ring, &vs)?;
            PolyMatrix::from_columns(&self.ring, rank, &kept)?
        };
        Ok(Presentation {
            ring: self.ring.clone(),
            generator_shifts: shifts,
            relations,
            minimal: true,
            generator_indices: origin,
        })
    }
}

pub fn minimalize(p: &Presentation) -> Result<Presentation> {
    p.minimalize()
}
