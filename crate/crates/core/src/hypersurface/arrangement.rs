//! Test whether `f` is a product of linear forms.
//!
//! Along a line `p + t·q` with `f(p) ≠ 0`, each rational root `t₀` gives a
//! point on the hypersurface; if that point is smooth, the gradient there
//! is proportional to the linear factor through it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::polyring::{Monomial, Polynomial, Rational, Ring};

const MAX_COEFFICIENT: u64 = 1 << 40;
const MAX_CANDIDATES: usize = 200_000;
const ATTEMPTS: usize = 40;

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn horner(coeffs: &[Rational], t: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

/// Rational roots of `Σ coeffs[k] t^k`; `None` when the coefficients are
/// too large for the candidate search.
fn rational_roots(coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let top = ints.iter().rposition(|c| !c.is_zero())?;
    let low = ints.iter().position(|c| !c.is_zero())?;
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    if top == low {
        return Some(roots);
    }
    let a = ints[low].abs().to_u64().filter(|&v| v <= MAX_COEFFICIENT)?;
    let b = ints[top].abs().to_u64().filter(|&v| v <= MAX_COEFFICIENT)?;
    let (na, nb) = (divisors(a), divisors(b));
    if na.len() * nb.len() > MAX_CANDIDATES {
        return None;
    }
    for p in &na {
        for q in &nb {
            if p.gcd(q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let t = Rational::new(BigInt::from(*p) * sign, BigInt::from(*q));
                if horner(coeffs, &t).is_zero() && !roots.contains(&t) {
                    roots.push(t);
                }
            }
        }
    }
    Some(roots)
}

/// Deterministic base point and direction for attempt `k`.
fn line(k: usize, nvars: usize) -> (Vec<Rational>, Vec<Rational>) {
    let q = |i: usize| Rational::from_integer(BigInt::from(i as i64));
    let p = (0..nvars).map(|i| q((i * (k + 2) + k * k) % (2 * nvars + 3) + 1)).collect();
    let dir = (0..nvars)
        .map(|i| if i == k % nvars { q(1) } else { q((i + k) % 3) })
        .collect();
    (p, dir)
}

fn restrict(f: &Polynomial, p: &[Rational], dir: &[Rational]) -> Vec<Rational> {
    let ring = Ring::new(&["t"]).expect("one variable");
    let t = Polynomial::var(&ring, 0);
    let images: Vec<Polynomial> = p
        .iter()
        .zip(dir)
        .map(|(a, b)| Polynomial::constant(&ring, a.clone()) + t.scale(b))
        .collect();
    let u = f.substitute(&images).expect("well-formed substitution");
    let deg = f.degree().unwrap_or(0) as usize;
    (0..=deg)
        .map(|k| u.coefficient(&Monomial::var_pow(0, k as u32)))
        .collect()
}

/// The linear factors of `f` when it is a product of linear forms over ℚ
/// and the search succeeds.
pub fn linear_factors(f: &Polynomial) -> Option<Vec<Polynomial>> {
    let ring = f.ring().clone();
    let n1 = ring.nvars();
    let mut rest = f.primitive_part();
    let mut factors = Vec::new();
    let grad_at = |g: &Polynomial, pt: &[Rational]| -> Vec<Rational> {
        g.gradient().iter().map(|h| h.evaluate(pt)).collect()
    };
    for k in 0..ATTEMPTS {
        match rest.degree() {
            None => return None,
            Some(0) => break,
            Some(1) => {
                factors.push(rest.primitive_part());
                rest = Polynomial::one(&ring);
                break;
            }
            _ => {}
        }
        let (p, dir) = line(k, n1);
        if rest.evaluate(&p).is_zero() {
            continue;
        }
        let Some(roots) = rational_roots(&restrict(&rest, &p, &dir)) else {
            continue;
        };
        for r in roots {
            let pt: Vec<Rational> = p.iter().zip(&dir).map(|(a, b)| a + &r * b).collect();
            let g = grad_at(&rest, &pt);
            if g.iter().all(Zero::is_zero) {
                continue;
            }
            let l = Polynomial::from_terms(
                &ring,
                g.into_iter().enumerate().map(|(i, c)| (Monomial::var(i), c)),
            )
            .primitive_part();
            if let Ok(Some(q)) = rest.exact_divide(&l) {
                factors.push(l);
                rest = q;
            }
        }
    }
    if rest.degree() == Some(0) {
        factors.sort_by_key(|l| l.to_string());
        Some(factors)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    #[test]
    fn finds_the_lines_of_an_arrangement() {
        let r = Ring::standard(3).unwrap();
        let f = parse_polynomial("x*y*z*(x+y+z)*(x-2*y)", &r).unwrap();
        let ls = linear_factors(&f).unwrap();
        assert_eq!(ls.len(), 5);
        let prod = ls.iter().fold(Polynomial::one(&r), |a, l| a * l);
        assert_eq!(prod.primitive_part(), f.primitive_part());
    }

    #[test]
    fn rejects_a_conic_factor() {
        let r = Ring::standard(3).unwrap();
        let f = parse_polynomial("x*(x^2+y^2+z^2)", &r).unwrap();
        assert!(linear_factors(&f).is_none());
    }
}
