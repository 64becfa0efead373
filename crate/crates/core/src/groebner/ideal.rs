use std::fmt;

use super::basis::{groebner_basis, GroebnerBasis};
use super::minimal::minimal_ideal_generators;
use super::syzygy::polynomial_syzygies;
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Polynomial, Ring};

/// An ideal of `S`, held by a list of generators.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
        }
    }

    /// The irrelevant ideal `(x_0, …, x_n)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn groebner_basis(&self) -> Result<GroebnerBasis> {
        groebner_basis(&self.ring, &self.gens, MonomialOrder::DegRevLex)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(Polynomial::is_constant) {
            return Ok(true);
        }
        Ok(self.groebner_basis()?.is_everything())
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.groebner_basis()?.contains_poly(p))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.groebner_basis()?;
        Ok(other.gens.iter().all(|g| gb.contains_poly(g)))
    }

    /// Equality as ideals, by comparing reduced Gröbner bases.
    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let a = self.groebner_basis()?;
        let b = other.groebner_basis()?;
        Ok(a.vectors().eq(b.vectors()))
    }

    /// Minimal generators when homogeneous, otherwise the reduced basis.
    pub fn minimalized(&self) -> Result<Ideal> {
        if self.is_unit()? {
            return Ok(Ideal::unit(&self.ring));
        }
        let gens = if self.is_homogeneous() {
            minimal_ideal_generators(&self.ring, &self.groebner_basis()?.polynomials())?
        } else {
            self.groebner_basis()?.polynomials()
        };
        Ideal::new(&self.ring, gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let a = self.gens.len();
        let mut all = self.gens.clone();
        all.extend(other.gens.iter().cloned());
        let syz = polynomial_syzygies(&self.ring, &all)?;
        let mut out = Vec::with_capacity(syz.len());
        for s in &syz {
            let mut acc = Polynomial::zero(&self.ring);
            for (c, g) in s.entries()[..a].iter().zip(&self.gens) {
                acc = acc + c * g;
            }
            out.push(acc);
        }
        Ideal::new(&self.ring, out)?.minimalized()
    }

    /// `(I : g) = {a : a·g ∈ I}`.
    pub fn colon(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let mut all = vec![g.clone()];
        all.extend(self.gens.iter().cloned());
        let syz = polynomial_syzygies(&self.ring, &all)?;
        let out = syz.iter().map(|s| s.entry(0).clone()).collect();
        Ideal::new(&self.ring, out)?.minimalized()
    }

    /// `(I : m) = ⋂_i (I : x_i)`.
    pub fn colon_max(&self) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for i in 0..self.ring.nvars() {
            let q = self.colon(&Polynomial::var(&self.ring, i))?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.expect("at least one variable"))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.intersection(j)
}

pub fn colon(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    i.colon(g)
}

pub fn colon_max(i: &Ideal) -> Result<Ideal> {
    i.colon_max()
}
