//! Hilbert series of `S/I` from the leading-term ideal.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::polyring::{Monomial, Rational};

/// Hilbert data of a graded quotient `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub nvars: usize,
    /// Coefficients (lowest degree first) of `P(t)` with
    /// `HS(t) = P(t) / (1−t)^nvars`.
    pub numerator: Vec<BigInt>,
    /// `Q(t)` with `HS(t) = Q(t) / (1−t)^dimension`, `Q(1) ≠ 0`.
    pub reduced_numerator: Vec<BigInt>,
    /// Krull dimension of `S/I`; `−1` for the unit ideal.
    pub dimension: i64,
    /// `Q(1)`: the multiplicity of `S/I` (its length when finite).
    pub degree: BigInt,
    /// Hilbert polynomial in `k`, lowest degree first; empty when zero.
    pub polynomial: Vec<Rational>,
}

impl HilbertData {
    pub fn from_leading_monomials(nvars: usize, leads: &[Monomial]) -> HilbertData {
        let numerator = trim(series_numerator(minimal(leads.to_vec())));
        let mut reduced = numerator.clone();
        let mut k = nvars as i64;
        let unit = reduced.is_empty();
        if !unit {
            while k > 0 && eval_at_one(&reduced).is_zero() {
                reduced = divide_by_one_minus_t(&reduced);
                k -= 1;
            }
        }
        let dimension = if unit { -1 } else { k };
        let degree = if unit { BigInt::zero() } else { eval_at_one(&reduced) };
        let polynomial = hilbert_polynomial(&reduced, dimension);
        HilbertData {
            nvars,
            numerator,
            reduced_numerator: reduced,
            dimension,
            degree,
            polynomial,
        }
    }

    /// `dim_ℚ (S/I)_k`, from the series expansion.
    pub fn hilbert_function(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        let n = self.nvars as i64;
        let mut total = BigInt::zero();
        for (i, c) in self.numerator.iter().enumerate() {
            let j = k - i as i64;
            if j < 0 || c.is_zero() {
                continue;
            }
            // coefficient of t^j in 1/(1−t)^n
            total += c * binomial(BigInt::from(j + n - 1), BigInt::from(n - 1));
        }
        total
    }

    pub fn polynomial_at(&self, k: i64) -> Rational {
        let x = Rational::from_integer(k.into());
        let mut acc = Rational::zero();
        for c in self.polynomial.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Degree of the Hilbert polynomial, `−1` when it is zero.
    pub fn polynomial_degree(&self) -> i64 {
        self.polynomial.len() as i64 - 1
    }

    /// Every `k` at or above this value has `HF(k) = HP(k)`.
    pub fn regularity_index(&self) -> i64 {
        (self.reduced_numerator.len() as i64 - self.dimension).max(0)
    }
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn eval_at_one(p: &[BigInt]) -> BigInt {
    p.iter().sum()
}

fn divide_by_one_minus_t(p: &[BigInt]) -> Vec<BigInt> {
    // p = (1−t)q  ⟹  q_i = p_0 + … + p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc.clone());
    }
    trim(q)
}

fn poly_add(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn minimal(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S/(gens)` over `(1−t)^nvars`.
fn series_numerator(gens: Vec<Monomial>) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, BigInt::zero());
            for (i, c) in acc.iter().enumerate() {
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    let mut counts = [0usize; crate::polyring::MAX_VARS];
    for g in &gens {
        for (v, c) in counts.iter_mut().enumerate() {
            if g.exponent(v) > 0 {
                *c += 1;
            }
        }
    }
    let var = (0..counts.len())
        .max_by_key(|&v| (counts[v], std::cmp::Reverse(v)))
        .expect("variables");
    let e = gens
        .iter()
        .map(|g| g.exponent(var))
        .filter(|&e| e > 0)
        .min()
        .expect("pivot variable occurs");
    let pivot = Monomial::var_pow(var, e);
    let mut plus = gens.clone();
    plus.push(pivot);
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|g| g.gcd(&pivot).quotient_of(g))
        .collect();
    let mut out = series_numerator(minimal(plus));
    poly_add(&mut out, &series_numerator(minimal(quotient)), e as usize);
    out
}

/// `Σ_i q_i · C(k − i + D − 1, D − 1)`, expanded in `k`.
fn hilbert_polynomial(q: &[BigInt], dim: i64) -> Vec<Rational> {
    if dim <= 0 {
        return Vec::new();
    }
    let d = dim as usize;
    let mut fact = BigInt::one();
    for j in 1..d {
        fact *= BigInt::from(j);
    }
    let mut total = vec![Rational::zero(); d];
    for (i, c) in q.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // Π_{j=1}^{D−1} (k − i + j)
        let mut p = vec![Rational::one()];
        for j in 1..d {
            let a = Rational::from_integer(BigInt::from(j as i64 - i as i64));
            let mut next = vec![Rational::zero(); p.len() + 1];
            for (idx, coef) in p.iter().enumerate() {
                next[idx] += coef * &a;
                next[idx + 1] += coef;
            }
            p = next;
        }
        let scale = Rational::new(c.clone(), fact.clone());
        for (idx, coef) in p.into_iter().enumerate() {
            total[idx] += coef * &scale;
        }
    }
    while total.last().is_some_and(Zero::is_zero) {
        total.pop();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_of_simple_quotients() {
        let h = HilbertData::from_leading_monomials(3, &[]);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.numerator, vec![BigInt::one()]);
        assert_eq!(h.hilbert_function(2), BigInt::from(6));

        let m: Vec<Monomial> = (0..3).map(Monomial::var).collect();
        let h = HilbertData::from_leading_monomials(3, &m);
        assert_eq!(h.dimension, 0);
        assert!(h.polynomial.is_empty());
        assert_eq!(h.degree, BigInt::one());

        let unit = HilbertData::from_leading_monomials(3, &[Monomial::ONE]);
        assert_eq!(unit.dimension, -1);
    }

    #[test]
    fn plane_curve_of_degree_three() {
        // S/(x^3) in three variables: HP(k) = 3k
        let h = HilbertData::from_leading_monomials(3, &[Monomial::var_pow(0, 3)]);
        assert_eq!(h.dimension, 2);
        assert_eq!(h.degree, BigInt::from(3));
        assert_eq!(h.polynomial, vec![Rational::zero(), Rational::from_integer(3.into())]);
        for k in 1..8 {
            assert_eq!(h.hilbert_function(k), BigInt::from(3 * k));
        }
    }

    #[test]
    fn pivot_recursion_matches_direct_count() {
        let gens = vec![
            Monomial::new(&[2, 1, 0, 0]),
            Monomial::new(&[1, 2, 1, 0]),
            Monomial::new(&[0, 1, 1, 1]),
            Monomial::new(&[3, 0, 0, 1]),
        ];
        let h = HilbertData::from_leading_monomials(4, &gens);
        for k in 0..9u32 {
            let direct = Monomial::all_of_degree(4, k)
                .iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count();
            assert_eq!(h.hilbert_function(k as i64), BigInt::from(direct));
        }
        let r = h.regularity_index();
        assert_eq!(Rational::from_integer(h.hilbert_function(r + 3)), h.polynomial_at(r + 3));
    }
}
