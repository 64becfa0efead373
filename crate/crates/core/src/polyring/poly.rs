use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::ring::Ring;
use super::Rational;
use crate::error::{Error, Result};

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept strictly decreasing in degree reverse lexicographic order
/// and never carry a zero coefficient, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Polynomial {
        Self::monomial(ring, Monomial::ONE, c)
    }

    pub fn from_int(ring: &Ring, c: i64) -> Polynomial {
        Self::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &Ring, index: usize) -> Polynomial {
        assert!(index < ring.nvars(), "variable index out of range");
        Self::monomial(ring, Monomial::var(index), Rational::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Collect arbitrary `(monomial, coefficient)` pairs into canonical form.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, Rational>) -> Polynomial {
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from terms already sorted in decreasing order with no repeats
    /// and no zero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| MonomialOrder::DegRevLex.cmp(&w[0].0, &w[1].0).is_gt()));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Degree-`k` homogeneous component.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == k)
            .cloned()
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Less
            } else if j == b.len() {
                std::cmp::Ordering::Greater
            } else {
                MonomialOrder::DegRevLex.cmp(&a[i].0, &b[j].0)
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        if index >= self.ring.nvars() {
            return Err(Error::VariableOutOfRange {
                index,
                nvars: self.ring.nvars(),
            });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(index);
            m.without_var(index)
                .map(|q| (q, c * Rational::from_integer(BigInt::from(e))))
        });
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars())
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Quotient `self / divisor` when the division is exact, `None` otherwise.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        let Some((lm, lc)) = divisor.terms.first() else {
            return Err(Error::DivisionByZero);
        };
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let Some(q) = m.checked_div(lm) else {
                return Ok(None);
            };
            let qc = c / lc;
            rem = rem - divisor.mul_monomial(&q, &qc);
            quotient.push((q, qc));
        }
        Ok(Some(Polynomial::from_sorted_terms(&self.ring, quotient)))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Ring homomorphism `x_i -> images[i]`, landing in the ring of the images.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(&p.ring), p.clone()]).collect();
        let mut total = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exponent(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().checked_mul(&images[i])?;
                    pw.push(next);
                }
                if e > 0 {
                    t = t.checked_mul(&pw[e])?;
                }
            }
            total = total.checked_add(&t)?;
        }
        Ok(total)
    }

    /// Same polynomial viewed in another ring with the same number of variables.
    pub fn with_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Rescale to coprime integer coefficients with a positive leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut scale = Rational::new(den_lcm, num_gcd);
        if self.terms[0].1.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("ring mismatch")
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$checked(rhs).expect("ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Euler derivation `(x_0, ..., x_n)` with zero shifts.
pub fn euler_vector(ring: &Ring) -> super::ModuleVector {
    let entries = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
    super::ModuleVector::new(entries, vec![0; ring.nvars()]).expect("consistent lengths")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn ring4() -> Ring {
        Ring::new(&["x", "y", "z", "w"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &ring4()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        assert!((&p("x+y") * &p("0")).is_zero());
    }

    #[test]
    fn product_of_two_cones() {
        let f = &p("x^2-z*w") * &p("x^2+y^2+z^2");
        assert_eq!(f.num_terms(), 6);
        assert_eq!(f.degree(), Some(4));
        assert!(f.is_homogeneous());
    }

    #[test]
    fn derivatives() {
        let f = p("x*y*z - w^3");
        assert_eq!(f.partial_derivative(0).unwrap(), p("y*z"));
        assert_eq!(f.partial_derivative(3).unwrap(), p("-3*w^2"));
        assert!(p("y^2").partial_derivative(0).unwrap().is_zero());
        assert!(matches!(
            f.partial_derivative(4),
            Err(Error::VariableOutOfRange { .. })
        ));
    }

    #[test]
    fn euler_identity_on_fixed_form() {
        let f = p("(x^3-y*z*w)^3 + (w^3 - x*y*z)^3");
        let r = f.ring().clone();
        let e = euler_vector(&r);
        let mut sum = Polynomial::zero(&r);
        for (xi, fi) in e.entries().iter().zip(f.gradient()) {
            sum = sum + xi * &fi;
        }
        assert_eq!(sum, f.scale(&Rational::from_integer(9.into())));
    }

    #[test]
    fn exact_division() {
        let f = p("x^2-z*w");
        let g = &f * &p("x+y");
        assert_eq!(g.exact_divide(&f).unwrap(), Some(p("x+y")));
        assert_eq!(p("x^2+1").exact_divide(&p("x")).unwrap(), None);
        assert_eq!(p("x").exact_divide(&p("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let other = Ring::new(&["a", "b"]).unwrap();
        let q = Polynomial::var(&other, 0);
        assert_eq!(p("x").checked_mul(&q), Err(Error::RingMismatch));
    }

    #[test]
    fn primitive_part_normalizes() {
        let q = p("-2/3*x + 4/9*y");
        assert_eq!(q.primitive_part(), p("3*x - 2*y"));
    }

    #[test]
    fn substitution_and_power() {
        let f = p("x*y");
        let r = ring4();
        let images = vec![p("y"), p("x"), p("z"), p("w")];
        assert_eq!(f.substitute(&images).unwrap(), f);
        assert_eq!(p("x+y").pow(3), p("x^3+3*x^2*y+3*x*y^2+y^3"));
        assert_eq!(p("x").pow(0), Polynomial::one(&r));
    }
}
