//! Integer-coefficient sparse vectors used inside Gröbner computations.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::ModuleOrder;
use crate::polyring::{ModuleVector, Monomial, Polynomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub m: Monomial,
    pub c: u32,
    pub k: BigInt,
}

/// Terms sorted strictly decreasing in the module order, no zero coefficients.
pub(crate) type Vector = Vec<Term>;

pub(crate) fn sort_terms(v: &mut Vector, order: &ModuleOrder) {
    v.sort_by(|a, b| order.cmp((&b.m, b.c), (&a.m, a.c)));
    let mut out: Vector = Vec::with_capacity(v.len());
    for t in v.drain(..) {
        match out.last_mut() {
            Some(last) if last.m == t.m && last.c == t.c => last.k += t.k,
            _ => out.push(t),
        }
    }
    out.retain(|t| !t.k.is_zero());
    *v = out;
}

fn lcm_of_denominators<'a>(coeffs: impl Iterator<Item = &'a Rational>) -> BigInt {
    coeffs.fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// `den·v` over ℤ for the least common denominator `den`.
pub(crate) fn integer_terms(entries: &[(u32, &Polynomial)], order: &ModuleOrder) -> (Vector, BigInt) {
    let den = lcm_of_denominators(entries.iter().flat_map(|(_, p)| p.terms().iter().map(|t| &t.1)));
    let mut v: Vector = entries
        .iter()
        .flat_map(|(c, p)| {
            let den = &den;
            p.terms().iter().map(move |(m, q)| Term {
                m: *m,
                c: *c,
                k: q.numer() * (den / q.denom()),
            })
        })
        .collect();
    sort_terms(&mut v, order);
    (v, den)
}

/// Integer multiple of `v`, clearing denominators.
pub(crate) fn from_module(v: &ModuleVector, order: &ModuleOrder) -> Vector {
    let entries: Vec<(u32, &Polynomial)> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(i, p)| (i as u32, p))
        .collect();
    integer_terms(&entries, order).0
}

pub(crate) fn from_poly(p: &Polynomial, comp: u32, order: &ModuleOrder) -> Vector {
    integer_terms(&[(comp, p)], order).0
}

pub(crate) fn to_module(v: &[Term], ring: &Ring, shifts: &[i64], offset: u32) -> ModuleVector {
    let rank = shifts.len();
    let mut parts: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
    for t in v {
        parts[(t.c - offset) as usize].push((t.m, Rational::from_integer(t.k.clone())));
    }
    let entries = parts
        .into_iter()
        .map(|terms| Polynomial::from_terms(ring, terms))
        .collect();
    ModuleVector::new(entries, shifts.to_vec()).expect("consistent rank")
}

pub(crate) fn to_poly(v: &[Term], ring: &Ring) -> Polynomial {
    Polynomial::from_terms(
        ring,
        v.iter().map(|t| (t.m, Rational::from_integer(t.k.clone()))),
    )
}

pub(crate) fn content(v: &[Term]) -> BigInt {
    let mut g = BigInt::zero();
    for t in v {
        g = g.gcd(&t.k);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide by the content and make the leading coefficient positive.
/// Returns the factor the vector was divided by (sign included).
pub(crate) fn make_primitive(v: &mut Vector) -> BigInt {
    if v.is_empty() {
        return BigInt::one();
    }
    let mut g = content(v);
    if v[0].k.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in v.iter_mut() {
            t.k /= &g;
        }
    }
    g
}

pub(crate) fn max_weighted_degree(v: &[Term], order: &ModuleOrder) -> i64 {
    v.iter()
        .map(|t| order.weighted_degree(&t.m, t.c))
        .max()
        .unwrap_or(i64::MIN)
}

pub(crate) fn is_homogeneous(v: &[Term], order: &ModuleOrder) -> bool {
    match v.first() {
        None => true,
        Some(t) => {
            let d = order.weighted_degree(&t.m, t.c);
            v.iter().all(|s| order.weighted_degree(&s.m, s.c) == d)
        }
    }
}

pub(crate) fn mul_monomial(v: &[Term], m: &Monomial) -> Vector {
    v.iter()
        .map(|t| Term {
            m: t.m.mul(m),
            c: t.c,
            k: t.k.clone(),
        })
        .collect()
}

/// `a·p − b·(t·g)` where `p[at]` cancels against the leading term of `t·g`.
pub(crate) fn cancel_at(
    p: &[Term],
    at: usize,
    a: &BigInt,
    g: &[Term],
    t: &Monomial,
    b: &BigInt,
    order: &ModuleOrder,
) -> Vector {
    let scale = !a.is_one();
    let mut out = Vec::with_capacity(p.len() + g.len());
    for s in &p[..at] {
        out.push(Term {
            m: s.m,
            c: s.c,
            k: if scale { &s.k * a } else { s.k.clone() },
        });
    }
    let (mut x, mut y) = (at + 1, 1);
    let mut gm = g.get(1).map(|s| s.m.mul(t));
    while x < p.len() && y < g.len() {
        let m = gm.expect("pending reducer term");
        let gs = &g[y];
        match order.cmp((&p[x].m, p[x].c), (&m, gs.c)) {
            Ordering::Greater => {
                let s = &p[x];
                out.push(Term {
                    m: s.m,
                    c: s.c,
                    k: if scale { &s.k * a } else { s.k.clone() },
                });
                x += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    m,
                    c: gs.c,
                    k: -(b * &gs.k),
                });
                y += 1;
                gm = g.get(y).map(|s| s.m.mul(t));
            }
            Ordering::Equal => {
                let k = if scale { &p[x].k * a } else { p[x].k.clone() } - b * &gs.k;
                if !k.is_zero() {
                    out.push(Term { m, c: gs.c, k });
                }
                x += 1;
                y += 1;
                gm = g.get(y).map(|s| s.m.mul(t));
            }
        }
    }
    for s in &p[x.min(p.len())..] {
        out.push(Term {
            m: s.m,
            c: s.c,
            k: if scale { &s.k * a } else { s.k.clone() },
        });
    }
    while y < g.len() {
        let gs = &g[y];
        out.push(Term {
            m: gs.m.mul(t),
            c: gs.c,
            k: -(b * &gs.k),
        });
        y += 1;
    }
    out
}

/// Cofactors `(a, b)` with `a·p_lead = b·g_lead` and `gcd(a, b) = 1`, `a > 0`.
pub(crate) fn cofactors(p_lead: &BigInt, g_lead: &BigInt) -> (BigInt, BigInt) {
    let gcd = p_lead.gcd(g_lead);
    let mut a = g_lead / &gcd;
    let mut b = p_lead / &gcd;
    if a.is_negative() {
        a = -a;
        b = -b;
    }
    (a, b)
}
