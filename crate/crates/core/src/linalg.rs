//! Exact sparse row reduction over ℤ.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer row, strictly increasing columns, no zero entries.
pub(crate) type Row = Vec<(usize, BigInt)>;

fn primitive(row: &mut Row) {
    let mut g = BigInt::zero();
    for (_, k) in row.iter() {
        g = g.gcd(k);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, k)| k.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, k) in row.iter_mut() {
            *k /= &g;
        }
    }
}

/// `a·r − b·p`, where both rows share their leading column.
fn combine(r: &Row, a: &BigInt, p: &Row, b: &BigInt) -> Row {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, &r[i].1 * a));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&p[j].1 * b)));
            j += 1;
        } else {
            let k = &r[i].1 * a - &p[j].1 * b;
            if !k.is_zero() {
                out.push((ci, k));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `a·r − b·p` for arbitrary sparse rows.
fn axpy(r: &Row, a: &BigInt, p: &Row, b: &BigInt) -> Row {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, &r[i].1 * a));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&p[j].1 * b)));
            j += 1;
        } else {
            let k = &r[i].1 * a - &p[j].1 * b;
            if !k.is_zero() {
                out.push((ci, k));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rows in echelon form: every stored row has a distinct leading column.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<Row>,
    pivots: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce until the leading column has no pivot.
    pub fn reduce(&self, mut r: Row) -> Row {
        while let Some((c, lead)) = r.first() {
            let Some(&pi) = self.pivots.get(c) else { break };
            let p = &self.rows[pi];
            let g = lead.gcd(&p[0].1);
            let mut a = &p[0].1 / &g;
            let mut b = lead / &g;
            if a.is_negative() {
                a = -a;
                b = -b;
            }
            r = combine(&r, &a, p, &b);
            if !a.is_one() {
                primitive(&mut r);
            }
        }
        r
    }

    /// Clear every pivot column of `r`, not only the leading one. The result
    /// is primitive and, up to sign, independent of how `r` was written.
    pub fn reduce_full(&self, mut r: Row) -> Row {
        let mut pos = 0;
        while pos < r.len() {
            let Some(&pi) = self.pivots.get(&r[pos].0) else {
                pos += 1;
                continue;
            };
            let p = &self.rows[pi];
            let g = r[pos].1.gcd(&p[0].1);
            let mut a = &p[0].1 / &g;
            let mut b = &r[pos].1 / &g;
            if a.is_negative() {
                a = -a;
                b = -b;
            }
            r = axpy(&r, &a, p, &b);
            if !a.is_one() {
                primitive(&mut r);
            }
        }
        primitive(&mut r);
        r
    }

    /// Insert `r`; returns the reduced row (empty when `r` was dependent on
    /// the rows already present).
    pub fn insert(&mut self, r: Row) -> Row {
        let mut r = self.reduce(r);
        if let Some(c) = r.first().map(|e| e.0) {
            primitive(&mut r);
            self.pivots.insert(c, self.rows.len());
            self.rows.push(r.clone());
        }
        r
    }

    /// The reduced row echelon form: rows by increasing pivot, each one
    /// zero at every other pivot column.
    pub fn reduced_rows(&self) -> Vec<Row> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| std::cmp::Reverse(r[0].0));
        let mut done = Echelon::new();
        for r in rows {
            let r = done.reduce_full(r);
            done.pivots.insert(r[0].0, done.rows.len());
            done.rows.push(r);
        }
        done.rows.reverse();
        done.rows
    }

    pub fn is_in_span(&self, r: Row) -> bool {
        self.reduce(r).is_empty()
    }
}

/// Kernel of the linear map whose images of the basis vectors `0..n` are
/// `images[j]` (sparse over target columns). Each kernel vector is a
/// primitive sparse integer vector over `0..n`, one per non-pivot column
/// of the reduced echelon form, in increasing order of that column.
pub(crate) fn kernel(images: &[Row], target_dim: usize) -> Vec<Row> {
    let mut transposed: Vec<Row> = vec![Vec::new(); target_dim];
    for (j, img) in images.iter().enumerate() {
        for (t, k) in img {
            transposed[*t].push((j, k.clone()));
        }
    }
    let mut ech = Echelon::new();
    for r in transposed.into_iter().filter(|r| !r.is_empty()) {
        ech.insert(r);
    }
    // x_p = −(a / c)·x_f for each reduced row c·x_p + Σ a·x_f
    let mut by_free: HashMap<usize, Vec<(usize, &BigInt, &BigInt)>> = HashMap::new();
    let rref = ech.reduced_rows();
    for row in &rref {
        let (p, c) = (&row[0].0, &row[0].1);
        for (f, a) in &row[1..] {
            by_free.entry(*f).or_default().push((*p, c, a));
        }
    }
    let mut out = Vec::new();
    for f in (0..images.len()).filter(|f| !ech.pivots.contains_key(f)) {
        let deps = by_free.remove(&f).unwrap_or_default();
        let l = deps.iter().fold(BigInt::one(), |acc, (_, c, _)| acc.lcm(c));
        let mut v: Row = deps.iter().map(|(p, c, a)| (*p, -(&l / *c) * *a)).collect();
        v.push((f, l));
        v.sort_by_key(|e| e.0);
        primitive(&mut v);
        out.push(v);
    }
    out
}

pub(crate) fn rank(rows: impl IntoIterator<Item = Row>) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> Row {
        entries.iter().map(|&(c, k)| (c, BigInt::from(k))).collect()
    }

    #[test]
    fn rank_and_span() {
        let rows = vec![row(&[(0, 2), (1, 4)]), row(&[(0, 1), (1, 2)]), row(&[(1, 3), (2, 1)])];
        assert_eq!(rank(rows.clone()), 2);
        let mut e = Echelon::new();
        for r in rows {
            e.insert(r);
        }
        assert!(e.is_in_span(row(&[(0, 1), (1, 5), (2, 1)])));
        assert!(!e.is_in_span(row(&[(2, 1)])));
        assert_eq!(e.reduce_full(row(&[(0, 3), (1, 9), (2, 5), (3, 4)])), row(&[(2, 1), (3, 1)]));
    }

    #[test]
    fn kernel_of_a_small_map() {
        // e0 ↦ t0 + t1, e1 ↦ 2 t0 + 2 t1, e2 ↦ t1
        let images = vec![row(&[(0, 1), (1, 1)]), row(&[(0, 2), (1, 2)]), row(&[(1, 1)])];
        let ker = kernel(&images, 2);
        assert_eq!(ker, vec![row(&[(0, 2), (1, -1)])]);
    }
}
