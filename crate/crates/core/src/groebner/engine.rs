//! Incremental Buchberger completion.
//!
//! Elements are kept primitive over ℤ. Pairs are processed by increasing
//! sugar, so for homogeneous input the basis is complete up to degree `k`
//! as soon as every pair and pending generator of degree `≤ k` has been
//! handled. That is what lets minimal generators be read off one degree
//! at a time.

use num_traits::{One, Zero};

use super::order::ModuleOrder;
use super::vector::{self, cofactors, Term, Vector};
use crate::polyring::{Monomial, Rational};

const RESCALE_EVERY: u32 = 16;

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub v: Vector,
    pub lead: Monomial,
    pub comp: u32,
    pub sugar: i64,
    mask: u64,
}

fn divmask(m: &Monomial) -> u64 {
    const STEPS: [u32; 8] = [1, 2, 3, 4, 6, 8, 12, 16];
    let mut mask = 0u64;
    for i in 0..8 {
        let e = m.exponent(i);
        for (b, s) in STEPS.iter().enumerate() {
            if e >= *s {
                mask |= 1 << (i * 8 + b);
            }
        }
    }
    mask
}

impl Elem {
    pub fn new(v: Vector, sugar: i64) -> Elem {
        let lead = v[0].m;
        Elem {
            comp: v[0].c,
            mask: divmask(&lead),
            lead,
            v,
            sugar,
        }
    }
}

/// A set of reducers with fast divisor lookup.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub order: ModuleOrder,
    pub elems: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
}

impl Reducer {
    pub fn new(order: ModuleOrder) -> Reducer {
        let by_comp = vec![Vec::new(); order.rank()];
        Reducer {
            order,
            elems: Vec::new(),
            by_comp,
        }
    }

    pub fn from_vectors(order: ModuleOrder, vs: Vec<Vector>) -> Reducer {
        let mut r = Reducer::new(order);
        for v in vs {
            if !v.is_empty() {
                let sugar = vector::max_weighted_degree(&v, &r.order);
                r.push(Elem::new(v, sugar));
            }
        }
        r
    }

    pub fn push(&mut self, e: Elem) -> usize {
        let i = self.elems.len();
        self.by_comp[e.comp as usize].push(i);
        self.elems.push(e);
        i
    }

    pub fn deactivate(&mut self, i: usize) {
        let c = self.elems[i].comp as usize;
        self.by_comp[c].retain(|&j| j != i);
    }

    pub fn active(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_comp.iter().flatten().copied()
    }

    pub fn active_in(&self, comp: u32) -> &[usize] {
        &self.by_comp[comp as usize]
    }

    fn find(&self, m: &Monomial, c: u32, skip: Option<usize>) -> Option<usize> {
        let mask = divmask(m);
        let mut best: Option<usize> = None;
        for &i in &self.by_comp[c as usize] {
            if Some(i) == skip {
                continue;
            }
            let e = &self.elems[i];
            if e.mask & !mask != 0 || !e.lead.divides(m) {
                continue;
            }
            match best {
                Some(b) if self.elems[b].v.len() <= e.v.len() => {}
                _ => best = Some(i),
            }
        }
        best
    }

    /// Reduce `p`, starting the scan at term `from`. With `full` every term
    /// is reduced, otherwise only the leading one. `scale`, when given, is
    /// multiplied by every factor the vector was scaled by, so that the
    /// true remainder is `result / scale`.
    pub fn reduce_from(
        &self,
        mut p: Vector,
        from: usize,
        full: bool,
        skip: Option<usize>,
        mut scale: Option<&mut Rational>,
    ) -> Vector {
        let mut pos = from;
        let mut scaled_steps = 0u32;
        while pos < p.len() {
            let (m, c) = (p[pos].m, p[pos].c);
            match self.find(&m, c, skip) {
                Some(i) => {
                    let g = &self.elems[i];
                    let t = g.lead.quotient_of(&m);
                    let (a, b) = cofactors(&p[pos].k, &g.v[0].k);
                    p = vector::cancel_at(&p, pos, &a, &g.v, &t, &b, &self.order);
                    if !a.is_one() {
                        if let Some(s) = scale.as_deref_mut() {
                            *s *= Rational::from_integer(a);
                        }
                        scaled_steps += 1;
                        if scaled_steps >= RESCALE_EVERY {
                            scaled_steps = 0;
                            let g = vector::content(&p);
                            if !g.is_zero() && !g.is_one() {
                                for t in p.iter_mut() {
                                    t.k /= &g;
                                }
                                if let Some(s) = scale.as_deref_mut() {
                                    *s /= Rational::from_integer(g);
                                }
                            }
                        }
                    }
                }
                None if full => pos += 1,
                None => break,
            }
        }
        p
    }

    pub fn reduce(&self, p: Vector, full: bool) -> Vector {
        self.reduce_from(p, 0, full, None, None)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: i64,
}

/// Buchberger completion that can be driven one degree at a time.
#[derive(Clone, Debug)]
pub(crate) struct Engine {
    pub red: Reducer,
    pairs: Vec<Pair>,
    pending: Vec<(i64, Vector)>,
    product_criterion: bool,
    /// Remainders leading in a component `≥` this bound are set aside
    /// instead of joining the basis.
    park_from: Option<u32>,
    parked: Vec<Vector>,
}

impl Engine {
    pub fn new(order: ModuleOrder) -> Engine {
        let product_criterion = order.rank() == 1;
        Engine {
            red: Reducer::new(order),
            pairs: Vec::new(),
            pending: Vec::new(),
            product_criterion,
            park_from: None,
            parked: Vec::new(),
        }
    }

    /// Keep remainders that lead in components `≥ bound` out of the basis.
    /// Their pairs are never formed; they are collected in [`Engine::parked`].
    pub fn parking(order: ModuleOrder, bound: u32) -> Engine {
        let mut e = Engine::new(order);
        e.park_from = Some(bound);
        e
    }

    pub fn parked(&self) -> &[Vector] {
        &self.parked
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.red.order
    }

    pub fn add_generator(&mut self, v: Vector) {
        if !v.is_empty() {
            let sugar = vector::max_weighted_degree(&v, &self.red.order);
            self.pending.push((sugar, v));
        }
    }

    /// Smallest sugar among outstanding work.
    pub fn next_degree(&self) -> Option<i64> {
        let p = self.pairs.iter().map(|p| p.sugar).min();
        let g = self.pending.iter().map(|(s, _)| *s).min();
        match (p, g) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Process all work of sugar `≤ bound` (everything when `None`).
    pub fn complete(&mut self, bound: Option<i64>) {
        while let Some(deg) = self.next_degree() {
            if bound.is_some_and(|b| deg > b) {
                break;
            }
            self.step(deg);
        }
    }

    fn step(&mut self, deg: i64) {
        let mut gens = Vec::new();
        self.pending.retain(|(s, v)| {
            if *s == deg {
                gens.push(v.clone());
                false
            } else {
                true
            }
        });
        let mut batch = Vec::new();
        self.pairs.retain(|p| {
            if p.sugar == deg {
                batch.push(p.clone());
                false
            } else {
                true
            }
        });
        let order = self.red.order.clone();
        batch.sort_by(|a, b| {
            let ca = self.red.elems[a.i].comp;
            let cb = self.red.elems[b.i].comp;
            order
                .cmp((&a.lcm, ca), (&b.lcm, cb))
                .then((a.i, a.j).cmp(&(b.i, b.j)))
        });
        for v in gens {
            self.insert_reduced(v, deg);
        }
        for p in batch {
            let s = self.s_vector(&p);
            self.insert_reduced(s, deg);
        }
    }

    fn s_vector(&self, p: &Pair) -> Vector {
        let gi = &self.red.elems[p.i];
        let gj = &self.red.elems[p.j];
        let ti = gi.lead.quotient_of(&p.lcm);
        let tj = gj.lead.quotient_of(&p.lcm);
        let base = vector::mul_monomial(&gi.v, &ti);
        let (a, b) = cofactors(&base[0].k, &gj.v[0].k);
        vector::cancel_at(&base, 0, &a, &gj.v, &tj, &b, &self.red.order)
    }

    /// Fully reduce `v`; if nonzero, add it to the basis. Returns the index.
    pub fn insert_reduced(&mut self, v: Vector, sugar: i64) -> Option<usize> {
        let mut r = self.red.reduce(v, true);
        if r.is_empty() {
            return None;
        }
        vector::make_primitive(&mut r);
        if self.park_from.is_some_and(|b| r[0].c >= b) {
            self.parked.push(r);
            return None;
        }
        Some(self.insert(Elem::new(r, sugar)))
    }

    /// Add an element whose leading term is not divisible by any current
    /// leading term, updating the pair set (Gebauer–Möller).
    fn insert(&mut self, h: Elem) -> usize {
        let (lk, ck) = (h.lead, h.comp);
        let hsugar = h.sugar;
        let active: Vec<usize> = self.red.active_in(ck).to_vec();

        struct Cand {
            i: usize,
            lcm: Monomial,
            coprime: bool,
            sugar: i64,
        }
        let mut cands: Vec<Cand> = active
            .iter()
            .map(|&i| {
                let g = &self.red.elems[i];
                let lcm = g.lead.lcm(&lk);
                let si = g.sugar + (lcm.degree() - g.lead.degree()) as i64;
                let sk = hsugar + (lcm.degree() - lk.degree()) as i64;
                Cand {
                    i,
                    lcm,
                    coprime: self.product_criterion && g.lead.is_coprime(&lk),
                    sugar: si.max(sk),
                }
            })
            .collect();

        // Chain criterion among the new pairs.
        let keep: Vec<bool> = (0..cands.len())
            .map(|a| {
                !cands.iter().enumerate().any(|(b, other)| {
                    b != a && other.lcm != cands[a].lcm && other.lcm.divides(&cands[a].lcm)
                })
            })
            .collect();
        let mut kept: Vec<Cand> = cands
            .drain(..)
            .zip(keep)
            .filter_map(|(c, k)| k.then_some(c))
            .collect();
        kept.sort_by(|a, b| {
            self.red
                .order
                .monomial
                .cmp(&a.lcm, &b.lcm)
                .then(a.i.cmp(&b.i))
        });
        let mut fresh = Vec::new();
        let mut idx = 0;
        while idx < kept.len() {
            let mut end = idx + 1;
            while end < kept.len() && kept[end].lcm == kept[idx].lcm {
                end += 1;
            }
            if !kept[idx..end].iter().any(|c| c.coprime) {
                fresh.push((kept[idx].i, kept[idx].lcm, kept[idx].sugar));
            }
            idx = end;
        }

        // Old pairs made redundant by the new leading term.
        let elems = &self.red.elems;
        self.pairs.retain(|p| {
            if elems[p.i].comp != ck || !lk.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead.lcm(&lk);
            let lj = elems[p.j].lead.lcm(&lk);
            li == p.lcm || lj == p.lcm
        });

        for &i in &active {
            if lk.divides(&self.red.elems[i].lead) {
                self.red.deactivate(i);
            }
        }
        let k = self.red.push(h);
        for (i, lcm, sugar) in fresh {
            self.pairs.push(Pair {
                i,
                j: k,
                lcm,
                sugar,
            });
        }
        k
    }

    /// The reduced basis: minimal leading terms, tails fully reduced,
    /// primitive with positive leading coefficient, increasing order.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let active: Vec<usize> = self.red.active().collect();
        let mut out: Vec<Vector> = active
            .iter()
            .map(|&i| {
                let mut v = self
                    .red
                    .reduce_from(self.red.elems[i].v.clone(), 1, true, Some(i), None);
                vector::make_primitive(&mut v);
                v
            })
            .collect();
        let order = &self.red.order;
        out.sort_by(|a, b| order.cmp((&a[0].m, a[0].c), (&b[0].m, b[0].c)));
        out
    }
}

pub(crate) fn s_vector_of(a: &[Term], b: &[Term], order: &ModuleOrder) -> Option<Vector> {
    if a[0].c != b[0].c {
        return None;
    }
    let lcm = a[0].m.lcm(&b[0].m);
    let ta = a[0].m.quotient_of(&lcm);
    let tb = b[0].m.quotient_of(&lcm);
    let base = vector::mul_monomial(a, &ta);
    let (x, y) = cofactors(&base[0].k, &b[0].k);
    Some(vector::cancel_at(&base, 0, &x, b, &tb, &y, order))
}
