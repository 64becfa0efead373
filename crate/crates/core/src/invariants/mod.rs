//! Hilbert series, dimension and height, saturation, and the singular
//! subscheme invariants of a hypersurface.

mod hilbert;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

pub use hilbert::HilbertData;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg;
use crate::polyring::{Monomial, Polynomial, Rational};

/// Hilbert series of `S/I`.
pub fn hilbert_series(i: &Ideal) -> Result<HilbertData> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous("ideal generators".into()));
    }
    let gb = i.groebner_basis()?;
    Ok(HilbertData::from_leading_monomials(
        i.ring().nvars(),
        &gb.leading_monomials(0),
    ))
}

/// Krull dimension of `S/I` (the affine cone); `−1` for the unit ideal.
pub fn krull_dimension(i: &Ideal) -> Result<i64> {
    Ok(hilbert_series(i)?.dimension)
}

/// Height of an ideal. The unit ideal is reported as `n+1` with
/// `improper` set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Height {
    pub value: usize,
    pub improper: bool,
}

pub fn height(i: &Ideal) -> Result<Height> {
    let n = i.ring().nvars();
    if i.is_zero() {
        return Ok(Height {
            value: 0,
            improper: false,
        });
    }
    let dim = krull_dimension(i)?;
    if dim < 0 {
        return Ok(Height {
            value: n,
            improper: true,
        });
    }
    Ok(Height {
        value: n - dim as usize,
        improper: false,
    })
}

/// `I^sat`, the stable value of `I ⊆ (I : m) ⊆ ((I : m) : m) ⊆ …`.
pub fn saturate(i: &Ideal) -> Result<Ideal> {
    let mut cur = i.minimalized()?;
    loop {
        let next = cur.colon_max()?;
        if next.same_as(&cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

pub fn is_saturated(i: &Ideal) -> Result<bool> {
    i.colon_max()?.same_as(i)
}

/// Invariants of the singular subscheme `Σ` read off the Hilbert
/// polynomial of the Jacobian algebra `S/J_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaInvariants {
    /// `dim Σ`, with `−1` for the empty scheme.
    pub s: i64,
    pub deg_sigma: BigInt,
    pub hilbert: HilbertData,
    /// Total Tjurina number, set when `Σ` is finite.
    pub tau: Option<BigInt>,
}

impl SigmaInvariants {
    pub fn hilbert_polynomial(&self) -> &[Rational] {
        &self.hilbert.polynomial
    }

    pub fn from_hilbert(hilbert: HilbertData) -> SigmaInvariants {
        let s = hilbert.polynomial_degree();
        let deg_sigma = if s < 0 {
            BigInt::zero()
        } else {
            hilbert.degree.clone()
        };
        let tau = (s == 0).then(|| deg_sigma.clone());
        SigmaInvariants {
            s,
            deg_sigma,
            hilbert,
            tau,
        }
    }
}

/// The Jacobian ideal of `f`.
pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal> {
    Ideal::new(f.ring(), f.gradient())
}

fn check_hypersurface(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!("{f}")));
    }
    Ok(())
}

pub fn sigma_invariants(f: &Polynomial) -> Result<SigmaInvariants> {
    check_hypersurface(f)?;
    let hs = hilbert_series(&jacobian_ideal(f)?)?;
    if (f.ring().nvars() as i64) - hs.dimension < 2 {
        return Err(Error::NotReduced);
    }
    Ok(SigmaInvariants::from_hilbert(hs))
}

/// `f` is reduced iff its Jacobian ideal has height at least two.
pub fn is_reduced(f: &Polynomial) -> Result<bool> {
    check_hypersurface(f)?;
    Ok(height(&jacobian_ideal(f)?)?.value >= 2)
}

/// `f` is a cone iff its partial derivatives are linearly dependent over ℚ.
pub fn is_cone(f: &Polynomial) -> Result<bool> {
    check_hypersurface(f)?;
    let partials = f.gradient();
    let d = f.degree().expect("nonzero");
    if d == 0 {
        return Ok(true);
    }
    let monos = Monomial::all_of_degree(f.ring().nvars(), d - 1);
    let index: std::collections::HashMap<Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let rows = partials.iter().map(|p| {
        let (v, _) = integer_row(p, &index);
        v
    });
    Ok(linalg::rank(rows) < partials.len())
}

/// Coefficients of `den·p` in the monomial basis given by `index`.
pub(crate) fn integer_row(
    p: &Polynomial,
    index: &std::collections::HashMap<Monomial, usize>,
) -> (linalg::Row, BigInt) {
    let den = p
        .terms()
        .iter()
        .fold(BigInt::from(1), |acc, (_, c)| num_integer::Integer::lcm(&acc, c.denom()));
    let mut row: linalg::Row = p
        .terms()
        .iter()
        .map(|(m, c)| (index[m], (c * Rational::from_integer(den.clone())).to_integer()))
        .collect();
    row.sort_by_key(|e| e.0);
    (row, den)
}

pub(crate) fn small(b: &BigInt) -> i64 {
    b.to_i64().expect("invariant fits in 64 bits")
}

#[cfg(test)]
mod tests;
