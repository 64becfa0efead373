use num_traits::One;

use super::engine::{s_vector_of, Engine, Reducer};
use super::order::{ModuleOrder, ModuleOrderKind};
use super::vector::{self, Vector};
use crate::error::{Error, Result};
use crate::polyring::{ModuleVector, Monomial, MonomialOrder, Polynomial, Rational, Ring};

/// A reduced Gröbner basis of an ideal (rank one) or of a submodule of a
/// graded free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    red: Reducer,
    reduced: bool,
}

impl GroebnerBasis {
    pub(crate) fn from_engine(ring: &Ring, engine: &Engine) -> GroebnerBasis {
        let order = engine.order().clone();
        GroebnerBasis {
            ring: ring.clone(),
            red: Reducer::from_vectors(order, engine.reduced_basis()),
            reduced: true,
        }
    }

    pub(crate) fn vectors(&self) -> impl Iterator<Item = &Vector> {
        self.red.elems.iter().map(|e| &e.v)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.red.order
    }

    pub fn rank(&self) -> usize {
        self.red.order.rank()
    }

    pub fn len(&self) -> usize {
        self.red.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.red.elems.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the basis contains a unit vector of the form `c·e_i` for
    /// every component, i.e. the submodule is the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank() as u32).all(|c| {
            self.red
                .elems
                .iter()
                .any(|e| e.comp == c && e.lead.is_one())
        })
    }

    pub fn generators(&self) -> Vec<ModuleVector> {
        let shifts = &self.red.order.shifts;
        self.vectors()
            .map(|v| vector::to_module(v, &self.ring, shifts, 0))
            .collect()
    }

    /// Generators of a rank-one basis as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.vectors().map(|v| vector::to_poly(v, &self.ring)).collect()
    }

    /// Leading monomials whose leading position is `comp`.
    pub fn leading_monomials(&self, comp: usize) -> Vec<Monomial> {
        self.red
            .elems
            .iter()
            .filter(|e| e.comp as usize == comp)
            .map(|e| e.lead)
            .collect()
    }

    fn remainder(&self, v: Vector) -> (Vector, Rational) {
        let mut scale = Rational::one();
        let r = self.red.reduce_from(v, 0, true, None, Some(&mut scale));
        (r, scale)
    }

    pub fn normal_form(&self, v: &ModuleVector) -> Result<ModuleVector> {
        if v.rank() != self.rank() {
            return Err(Error::MixedRanks(v.rank(), self.rank()));
        }
        if v.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let (iv, den) = integer_form(v.entries(), &self.red.order);
        let (r, scale) = self.remainder(iv);
        let out = vector::to_module(&r, &self.ring, v.shifts(), 0);
        let factor = (scale * den).recip();
        Ok(ModuleVector::new(
            out.entries().iter().map(|p| p.scale(&factor)).collect(),
            v.shifts().to_vec(),
        )
        .expect("same shape"))
    }

    pub fn normal_form_poly(&self, p: &Polynomial) -> Result<Polynomial> {
        if self.rank() != 1 {
            return Err(Error::MixedRanks(1, self.rank()));
        }
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let (iv, den) = integer_form(std::slice::from_ref(p), &self.red.order);
        let (r, scale) = self.remainder(iv);
        Ok(vector::to_poly(&r, &self.ring).scale(&(scale * den).recip()))
    }

    pub fn contains(&self, v: &ModuleVector) -> Result<bool> {
        let (iv, _) = integer_form(v.entries(), &self.red.order);
        Ok(self.red.reduce(iv, false).is_empty())
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        let iv = vector::from_poly(p, 0, &self.red.order);
        self.red.reduce(iv, false).is_empty()
    }

    /// Buchberger's criterion: every S-vector reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let vs: Vec<&Vector> = self.vectors().collect();
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                if let Some(s) = s_vector_of(a, b, &self.red.order) {
                    if !self.red.reduce(s, false).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// No leading term divides a term of a different element.
    pub fn is_interreduced(&self) -> bool {
        let es = &self.red.elems;
        es.iter().enumerate().all(|(i, e)| {
            es.iter().enumerate().all(|(j, g)| {
                i == j || !g.v.iter().any(|t| t.c == e.comp && e.lead.divides(&t.m))
            })
        })
    }
}

/// Integer vector `den·v` with `den` returned.
fn integer_form(entries: &[Polynomial], order: &ModuleOrder) -> (Vector, Rational) {
    let indexed: Vec<(u32, &Polynomial)> =
        entries.iter().enumerate().map(|(i, p)| (i as u32, p)).collect();
    let (v, den) = vector::integer_terms(&indexed, order);
    (v, Rational::from_integer(den))
}

fn check_ring(ring: &Ring, p: &Polynomial) -> Result<()> {
    if p.ring() != ring {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    let mo = ModuleOrder::ring(order);
    let mut engine = Engine::new(mo.clone());
    for g in gens {
        check_ring(ring, g)?;
        engine.add_generator(vector::from_poly(g, 0, &mo));
    }
    engine.complete(None);
    Ok(GroebnerBasis::from_engine(ring, &engine))
}

/// Reduced Gröbner basis of the submodule generated by `gens`; the ambient
/// free module is described by `order.shifts`.
pub fn module_groebner_basis(
    ring: &Ring,
    gens: &[ModuleVector],
    order: ModuleOrder,
) -> Result<GroebnerBasis> {
    let mut engine = Engine::new(order.clone());
    for g in gens {
        if g.rank() != order.rank() {
            return Err(Error::MixedRanks(g.rank(), order.rank()));
        }
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        engine.add_generator(vector::from_module(g, &order));
    }
    engine.complete(None);
    Ok(GroebnerBasis::from_engine(ring, &engine))
}

/// Position-over-term order on a free module with the given shifts.
pub fn pot_order(shifts: Vec<i64>) -> ModuleOrder {
    ModuleOrder::new(
        MonomialOrder::DegRevLex,
        ModuleOrderKind::PositionOverTerm,
        shifts,
    )
}

/// Term-over-position order on a free module with the given shifts.
pub fn top_order(shifts: Vec<i64>) -> ModuleOrder {
    ModuleOrder::new(
        MonomialOrder::DegRevLex,
        ModuleOrderKind::TermOverPosition,
        shifts,
    )
}

/// Normal form of a polynomial with respect to a rank-one basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form_poly(p)
}

/// Normal form of a module vector.
pub fn module_normal_form(v: &ModuleVector, gb: &GroebnerBasis) -> Result<ModuleVector> {
    gb.normal_form(v)
}
