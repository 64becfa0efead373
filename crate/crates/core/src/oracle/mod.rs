//! Degree-by-degree linear algebra for `D₀(f)`, independent of the Gröbner
//! machinery: each graded piece is the kernel of an explicit matrix in the
//! monomial basis.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::integer_row;
use crate::linalg::{self, Echelon, Row};
use crate::polyring::{euler_vector, ModuleVector, Monomial, PolyMatrix, Polynomial, Rational, Ring};

/// Monomial basis of `S_k`.
struct DegreeBasis {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    fn new(nvars: usize, k: u32) -> DegreeBasis {
        let monos = Monomial::all_of_degree(nvars, k);
        let index = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        DegreeBasis { monos, index }
    }

    fn len(&self) -> usize {
        self.monos.len()
    }
}

/// Shared data for one hypersurface.
struct Setup {
    ring: Ring,
    nvars: usize,
    d: u32,
    partials: Vec<Polynomial>,
}

impl Setup {
    fn new(f: &Polynomial) -> Result<Setup> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("{f}")));
        }
        let f = f.primitive_part();
        Ok(Setup {
            ring: f.ring().clone(),
            nvars: f.ring().nvars(),
            d: f.degree().expect("nonzero"),
            partials: f.gradient(),
        })
    }

    /// Kernel of `(a_j) ↦ Σ a_j f_j` on `(S_k)^{n+1}`, as rows over the
    /// unknowns `(j, m) ↦ j·|S_k| + index(m)`.
    fn kernel_rows(&self, k: u32) -> (DegreeBasis, Vec<Row>) {
        let src = DegreeBasis::new(self.nvars, k);
        if k + self.d < 1 {
            return (src, Vec::new());
        }
        let dst = DegreeBasis::new(self.nvars, k + self.d - 1);
        let mut images = Vec::with_capacity(self.nvars * src.len());
        for p in &self.partials {
            for m in &src.monos {
                let mut row: Row = p
                    .terms()
                    .iter()
                    .map(|(t, c)| (dst.index[&t.mul(m)], c.to_integer()))
                    .collect();
                row.sort_by_key(|e| e.0);
                images.push(row);
            }
        }
        let ker = linalg::kernel(&images, dst.len());
        (src, ker)
    }

    fn to_vector(&self, basis: &DegreeBasis, row: &Row) -> ModuleVector {
        let mut parts: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.nvars];
        for (c, coef) in row {
            let (j, i) = (c / basis.len(), c % basis.len());
            parts[j].push((basis.monos[i], Rational::from_integer(coef.clone())));
        }
        let entries = parts
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect();
        ModuleVector::unshifted(entries).expect("rank n+1")
    }

    /// Coordinates of a homogeneous vector of degree `k` over the unknowns.
    fn to_row(&self, basis: &DegreeBasis, v: &ModuleVector) -> Row {
        let mut den = BigInt::from(1);
        for p in v.entries() {
            for (_, c) in p.terms() {
                den = num_integer::Integer::lcm(&den, c.denom());
            }
        }
        let den = Rational::from_integer(den);
        let mut row: Row = Vec::new();
        for (j, p) in v.entries().iter().enumerate() {
            for (m, c) in p.terms() {
                row.push((j * basis.len() + basis.index[m], (c * &den).to_integer()));
            }
        }
        row.sort_by_key(|e| e.0);
        row
    }

    fn multiply_row(&self, from: &DegreeBasis, to: &DegreeBasis, row: &Row, var: usize) -> Row {
        let x = Monomial::var(var);
        let mut out: Row = row
            .iter()
            .map(|(c, k)| {
                let (j, i) = (c / from.len(), c % from.len());
                (j * to.len() + to.index[&from.monos[i].mul(&x)], k.clone())
            })
            .collect();
        out.sort_by_key(|e| e.0);
        out
    }
}

/// A basis of `D₀(f)_k`.
#[derive(Clone, Debug)]
pub struct GradedPieceBasis {
    pub degree: u32,
    pub basis: Vec<ModuleVector>,
    pub dimension: usize,
}

pub fn graded_piece(f: &Polynomial, k: u32) -> Result<GradedPieceBasis> {
    let setup = Setup::new(f)?;
    let (src, ker) = setup.kernel_rows(k);
    let basis: Vec<ModuleVector> = ker.iter().map(|r| setup.to_vector(&src, r)).collect();
    Ok(GradedPieceBasis {
        degree: k,
        dimension: basis.len(),
        basis,
    })
}

/// `dim D₀(f)_k` for `k = 0..=k_max`.
pub fn graded_dimensions(f: &Polynomial, k_max: u32) -> Result<Vec<usize>> {
    let setup = Setup::new(f)?;
    Ok((0..=k_max).map(|k| setup.kernel_rows(k).1.len()).collect())
}

/// Number of minimal generators in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCount {
    pub degree: u32,
    pub dimension: usize,
    pub decomposable: usize,
    pub mu: usize,
}

/// `μ_k = dim D₀(f)_k − dim S_1·D₀(f)_{k−1}` for `k = 0..=k_max`.
pub fn minimal_generator_counts(f: &Polynomial, k_max: u32) -> Result<Vec<GeneratorCount>> {
    let setup = Setup::new(f)?;
    let mut out = Vec::new();
    let mut prev: Option<(DegreeBasis, Vec<Row>)> = None;
    for k in 0..=k_max {
        let (basis, ker) = setup.kernel_rows(k);
        let decomposable = match &prev {
            Some((pb, prows)) if !prows.is_empty() => linalg::rank(
                prows
                    .iter()
                    .flat_map(|r| (0..setup.nvars).map(move |v| (r, v)))
                    .map(|(r, v)| setup.multiply_row(pb, &basis, r, v)),
            ),
            _ => 0,
        };
        out.push(GeneratorCount {
            degree: k,
            dimension: ker.len(),
            decomposable,
            mu: ker.len() - decomposable,
        });
        prev = Some((basis, ker));
    }
    Ok(out)
}

/// Outcome of comparing `ker(v)_k` with `im(u)_k` degree by degree.
#[derive(Clone, Debug)]
pub enum DirectCheck {
    /// Equality held in every degree `≤ up_to`.
    Pass { up_to: u32 },
    /// `witness` lies in `ker v` but not in `im u`.
    Fail { degree: u32, witness: ModuleVector },
    /// `D₀(f)` vanishes in every tested degree.
    Inconclusive { up_to: u32 },
}

impl DirectCheck {
    pub fn label(&self) -> &'static str {
        match self {
            DirectCheck::Pass { .. } => "pass",
            DirectCheck::Fail { .. } => "fail",
            DirectCheck::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Check exactness of `0 → ⊕ S(−d_i) → D₀(f) → B(f, ρ̂)` in the middle for
/// every degree `k ≤ k_max`. Vectors in `candidates` are preferred as
/// failure witnesses.
pub fn tameness_direct_check(
    f: &Polynomial,
    subset: &[ModuleVector],
    k_max: u32,
    candidates: &[ModuleVector],
) -> Result<DirectCheck> {
    let setup = Setup::new(f)?;
    let n1 = setup.nvars;
    if subset.len() + 2 != n1 {
        return Err(Error::InvalidSubset(format!(
            "expected {} syzygies, got {}",
            n1 - 2,
            subset.len()
        )));
    }
    for s in subset {
        if s.rank() != n1 {
            return Err(Error::MixedRanks(s.rank(), n1));
        }
    }
    // v(ρ) = Σ_j ρ_j C_j / f with C_j the cofactors of the last row.
    let mut rows: Vec<Vec<Polynomial>> = vec![euler_vector(&setup.ring).into_entries()];
    rows.extend(subset.iter().map(|s| s.entries().to_vec()));
    let cofactors: Vec<Polynomial> = (0..n1)
        .map(|j| {
            let cols: Vec<usize> = (0..n1).filter(|&c| c != j).collect();
            let minor = PolyMatrix::from_rows(rows.clone())
                .expect("rectangular")
                .submatrix(&(0..n1 - 1).collect::<Vec<_>>(), &cols)
                .determinant()
                .expect("square");
            if (n1 - 1 + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect();
    let subset_degrees: Vec<u32> = subset
        .iter()
        .map(|s| s.entries().iter().filter_map(Polynomial::degree).max().unwrap_or(0))
        .collect();
    let mut any = false;
    for k in 0..=k_max {
        let (basis, ker) = setup.kernel_rows(k);
        if ker.is_empty() {
            continue;
        }
        any = true;
        let vecs: Vec<ModuleVector> = ker.iter().map(|r| setup.to_vector(&basis, r)).collect();
        let vimages: Vec<Polynomial> = vecs
            .iter()
            .map(|b| {
                b.entries()
                    .iter()
                    .zip(&cofactors)
                    .fold(Polynomial::zero(&setup.ring), |acc, (a, c)| acc + a * c)
            })
            .collect();
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        let img_rows: Vec<Row> = vimages
            .iter()
            .map(|p| {
                for (m, _) in p.terms() {
                    let next = index.len();
                    index.entry(*m).or_insert(next);
                }
                integer_row(p, &index).0
            })
            .collect();
        let kernel_of_v = linalg::kernel(&img_rows, index.len());
        let mut im_u = Echelon::new();
        for (s, &ds) in subset.iter().zip(&subset_degrees) {
            if ds > k {
                continue;
            }
            for m in Monomial::all_of_degree(n1, k - ds) {
                let mv = ModuleVector::unshifted(
                    s.entries()
                        .iter()
                        .map(|p| p.mul_monomial(&m, &Rational::from_integer(1.into())))
                        .collect(),
                )?;
                im_u.insert(setup.to_row(&basis, &mv));
            }
        }
        if im_u.rank() == kernel_of_v.len() {
            continue;
        }
        // pick a witness: a candidate of this degree first, else a kernel vector
        for c in candidates {
            if c.degree() != Some(k as i64) || c.rank() != n1 {
                continue;
            }
            let vc = c
                .entries()
                .iter()
                .zip(&cofactors)
                .fold(Polynomial::zero(&setup.ring), |acc, (a, q)| acc + a * q);
            if vc.is_zero() && !im_u.is_in_span(setup.to_row(&basis, c)) {
                return Ok(DirectCheck::Fail {
                    degree: k,
                    witness: c.clone(),
                });
            }
        }
        for kv in &kernel_of_v {
            let mut combo: HashMap<usize, BigInt> = HashMap::new();
            for (i, coef) in kv {
                for (c, x) in &ker[*i] {
                    *combo.entry(*c).or_default() += coef * x;
                }
            }
            let mut row: Row = combo.into_iter().filter(|(_, x)| x != &BigInt::from(0)).collect();
            row.sort_by_key(|e| e.0);
            if !im_u.is_in_span(row.clone()) {
                return Ok(DirectCheck::Fail {
                    degree: k,
                    witness: setup.to_vector(&basis, &row),
                });
            }
        }
        unreachable!("kernel strictly larger than the image yet spanned by it");
    }
    Ok(if any {
        DirectCheck::Pass { up_to: k_max }
    } else {
        DirectCheck::Inconclusive { up_to: k_max }
    })
}
