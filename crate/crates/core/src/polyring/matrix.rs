use std::collections::HashMap;
use std::fmt;

use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Element of a graded free module `⊕ S(-shift_i)`.
///
/// With this convention a homogeneous vector has `deg(entry_i) + shift_i`
/// constant over its nonzero entries.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleVector {
    entries: Vec<Polynomial>,
    shifts: Vec<i64>,
}

impl ModuleVector {
    pub fn new(entries: Vec<Polynomial>, shifts: Vec<i64>) -> Result<ModuleVector> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch("module vector of rank zero".into()));
        }
        if entries.len() != shifts.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} entries but {} shifts",
                entries.len(),
                shifts.len()
            )));
        }
        let ring = entries[0].ring().clone();
        if entries.iter().any(|e| *e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(ModuleVector { entries, shifts })
    }

    /// Vector in `S^rank` with all shifts zero.
    pub fn unshifted(entries: Vec<Polynomial>) -> Result<ModuleVector> {
        let n = entries.len();
        Self::new(entries, vec![0; n])
    }

    pub fn zero(ring: &Ring, shifts: Vec<i64>) -> ModuleVector {
        ModuleVector {
            entries: shifts.iter().map(|_| Polynomial::zero(ring)).collect(),
            shifts,
        }
    }

    pub fn ring(&self) -> &Ring {
        self.entries[0].ring()
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn into_entries(self) -> Vec<Polynomial> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// Common value of `deg(entry_i) + shift_i`; `None` for the zero vector
    /// or a vector that is not homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut deg = None;
        for (e, s) in self.entries.iter().zip(&self.shifts) {
            if e.is_zero() {
                continue;
            }
            if !e.is_homogeneous() {
                return None;
            }
            let d = e.degree().unwrap() as i64 + s;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn with_shifts(&self, shifts: Vec<i64>) -> Result<ModuleVector> {
        ModuleVector::new(self.entries.clone(), shifts)
    }

    pub fn scale(&self, c: &Polynomial) -> ModuleVector {
        ModuleVector {
            entries: self.entries.iter().map(|e| e * c).collect(),
            shifts: self.shifts.clone(),
        }
    }

    pub fn checked_add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        if self.rank() != other.rank() {
            return Err(Error::MixedRanks(self.rank(), other.rank()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(ModuleVector {
            entries,
            shifts: self.shifts.clone(),
        })
    }

    pub fn checked_sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.checked_add(&other.scale(&Polynomial::from_int(other.ring(), -1)))
    }

    /// `Σ entry_i * values_i`, e.g. applying a derivation to the partials of `f`.
    pub fn dot(&self, values: &[Polynomial]) -> Result<Polynomial> {
        if values.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "pairing rank {} with {} values",
                self.rank(),
                values.len()
            )));
        }
        let mut acc = Polynomial::zero(self.ring());
        for (a, b) in self.entries.iter().zip(values) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc.checked_add(&a.checked_mul(b)?)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Dense matrix of polynomials, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> PolyMatrix {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(ring: &Ring, rank: usize, cols: &[ModuleVector]) -> Result<PolyMatrix> {
        let mut m = Self::zero(ring, rank, cols.len());
        for (j, v) in cols.iter().enumerate() {
            if v.rank() != rank {
                return Err(Error::MixedRanks(rank, v.rank()));
            }
            for i in 0..rank {
                m.set(i, j, v.entry(i).clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let Some(ring) = self.entries.first().or(other.entries.first()).map(|p| p.ring().clone())
        else {
            return Ok(PolyMatrix {
                rows: self.rows,
                cols: other.cols,
                entries: Vec::new(),
            });
        };
        let mut out = Self::zero(&ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Determinant by cofactor expansion along the sparsest remaining row,
    /// memoizing minors by their (row set, column set).
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if self.rows > 20 {
            return Err(Error::DimensionMismatch("determinant limited to 20x20".into()));
        }
        let full = (1u32 << self.rows) - 1;
        let mut memo = HashMap::new();
        Ok(self.minor_det(full, full, &mut memo))
    }

    fn minor_det(&self, rows: u32, cols: u32, memo: &mut HashMap<(u32, u32), Polynomial>) -> Polynomial {
        if let Some(p) = memo.get(&(rows, cols)) {
            return p.clone();
        }
        let ring = self.entries[0].ring();
        let row_ids: Vec<usize> = (0..self.rows).filter(|i| rows >> i & 1 == 1).collect();
        let col_ids: Vec<usize> = (0..self.cols).filter(|j| cols >> j & 1 == 1).collect();
        let result = if row_ids.len() == 1 {
            self.get(row_ids[0], col_ids[0]).clone()
        } else {
            let pivot_row = *row_ids
                .iter()
                .min_by_key(|&&i| col_ids.iter().filter(|&&j| !self.get(i, j).is_zero()).count())
                .unwrap();
            let mut acc = Polynomial::zero(ring);
            for (pos, &j) in col_ids.iter().enumerate() {
                let entry = self.get(pivot_row, j);
                if entry.is_zero() {
                    continue;
                }
                let row_pos = row_ids.iter().position(|&i| i == pivot_row).unwrap();
                let sub = self.minor_det(rows & !(1 << pivot_row), cols & !(1 << j), memo);
                if sub.is_zero() {
                    continue;
                }
                let term = entry * &sub;
                acc = if (row_pos + pos) % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        };
        memo.insert((rows, cols), result.clone());
        result
    }

    /// All `k x k` minors, in lexicographic order of (row set, column set).
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for rs in combinations(self.rows, k) {
            for cs in combinations(self.cols, k) {
                out.push(self.submatrix(&rs, &cs).determinant()?);
            }
        }
        Ok(out)
    }

    pub fn has_constant_entry(&self) -> bool {
        self.entries.iter().any(|e| e.is_unit())
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn ring() -> Ring {
        Ring::new(&["x", "y", "z", "w"]).unwrap()
    }

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        let r = ring();
        PolyMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|s| parse_polynomial(s, &r).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(
            PolyMatrix::identity(&ring(), 4).determinant().unwrap(),
            Polynomial::one(&ring())
        );
        let d = m(&[&["x", "y"], &["z", "w"]]).determinant().unwrap();
        assert_eq!(d, parse_polynomial("x*w - y*z", &ring()).unwrap());
        let rep = m(&[&["x", "y", "1"], &["z", "w", "x"], &["x", "y", "1"]]);
        assert!(rep.determinant().unwrap().is_zero());
    }

    #[test]
    fn non_square_rejected() {
        let a = m(&[&["x", "y", "z"]]);
        assert_eq!(a.determinant(), Err(Error::NotSquare { rows: 1, cols: 3 }));
    }

    #[test]
    fn minors_of_row() {
        let a = m(&[&["x", "y", "z"]]);
        assert_eq!(a.minors(1).unwrap().len(), 3);
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
