use std::cmp::Ordering;
use std::fmt;

/// Largest number of ring variables supported by the packed monomial layout.
pub const MAX_VARS: usize = 8;

/// A power product `x_0^e_0 * ... * x_n^e_n` stored inline.
///
/// Slots past the ring's variable count are always zero, so equality,
/// hashing and divisibility work without knowing the ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub fn new(exponents: &[u32]) -> Monomial {
        assert!(exponents.len() <= MAX_VARS, "too many variables");
        let mut exps = [0u16; MAX_VARS];
        let mut deg = 0;
        for (slot, &e) in exps.iter_mut().zip(exponents) {
            *slot = u16::try_from(e).expect("exponent overflow");
            deg += e;
        }
        Monomial { exps, deg }
    }

    pub fn var(index: usize) -> Monomial {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, power: u32) -> Monomial {
        assert!(index < MAX_VARS);
        let mut m = Monomial::ONE;
        m.exps[index] = u16::try_from(power).expect("exponent overflow");
        m.deg = power;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (a, b) in exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        Monomial {
            exps,
            deg: other.deg - self.deg,
        }
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        let mut deg = 0;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
            deg += *a as u32;
        }
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        let mut deg = 0;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(*b);
            deg += *a as u32;
        }
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Lower the exponent of `index` by one; `None` if it is already zero.
    pub fn without_var(&self, index: usize) -> Option<Monomial> {
        if self.exps[index] == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[index] -= 1;
        m.deg -= 1;
        Some(m)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut m = Monomial::ONE;
        for _ in 0..k {
            m = m.mul(self);
        }
        m
    }

    /// Rewrite exponents through a variable permutation: slot `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (i, &p) in perm.iter().enumerate() {
            exps[p] = self.exps[i];
        }
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// All monomials of the given total degree in `nvars` variables, in
    /// decreasing degree-reverse-lexicographic order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u32; nvars];
        fn rec(i: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = current.len();
            if i + 1 == n {
                current[i] = left;
                out.push(Monomial::new(current));
                return;
            }
            for e in (0..=left).rev() {
                current[i] = e;
                rec(i + 1, left - e, current, out);
            }
            current[i] = 0;
        }
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::ONE);
            }
            return out;
        }
        rec(0, degree, &mut current, &mut out);
        out.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let used = self
            .exps
            .iter()
            .rposition(|&e| e != 0)
            .map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..used])
    }
}

/// Admissible orders on monomials. All are degree-compatible except `Lex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    DegLex,
    Lex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.deg.cmp(&b.deg).then_with(|| {
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::DegLex => a.deg.cmp(&b.deg).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        // x > y > z in degree one
        assert_eq!(o.cmp(&Monomial::var(0), &Monomial::var(1)), Ordering::Greater);
        // x*z < y^2 in degrevlex, but x*z > y^2 in deglex
        let xz = Monomial::new(&[1, 0, 1]);
        let yy = Monomial::new(&[0, 2, 0]);
        assert_eq!(o.cmp(&xz, &yy), Ordering::Less);
        assert_eq!(MonomialOrder::DegLex.cmp(&xz, &yy), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::new(&[2, 1, 0]);
        let b = Monomial::new(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), Monomial::new(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), Monomial::new(&[1, 1, 0]));
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b).checked_div(&a), Some(Monomial::new(&[0, 2, 1])));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(3, 0), vec![Monomial::ONE]);
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms[0], Monomial::new(&[2, 0, 0]));
        assert_eq!(ms[5], Monomial::new(&[0, 0, 2]));
    }
}
