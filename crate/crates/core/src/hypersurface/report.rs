//! The full analysis pipeline and its serializable report.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Signed;
use serde::Serialize;

use super::arrangement::linear_factors;
use super::bourbaki::{bourbaki, tame_scan, BourbakiResult, TameScan};
use super::checks::{verify_identities, IdentityCheck};
use super::pog::{classify, Classification, PogStructure};
use super::serial;
use super::syzygies::{jacobian_syzygies_with, SyzygySet};
use super::tjurina::{classify_by_tjurina, tjurina_bound, TjurinaClass};
use crate::error::{Error, Result};
use crate::groebner::resolve_ideal;
use crate::invariants::{sigma_invariants, small, SigmaInvariants};
use crate::oracle::{minimal_generator_counts, GeneratorCount};
use crate::polyring::{ModuleVector, Polynomial};

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    /// Named syzygies placed first in the generating set.
    pub declared: Vec<(String, ModuleVector)>,
    /// The input claims to be a hyperplane arrangement.
    pub arrangement: bool,
    /// Cap on the number of subsets tested by the tame scan.
    pub scan_limit: Option<usize>,
    /// Run the linear-algebra oracle up to this degree.
    pub oracle_degree: Option<u32>,
    pub check_saturation: bool,
    pub check_identities: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            declared: Vec::new(),
            arrangement: false,
            scan_limit: Some(1000),
            oracle_degree: None,
            check_saturation: true,
            check_identities: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaSummary {
    pub s: i64,
    pub deg_sigma: i64,
    /// Hilbert polynomial of `S/J_f`, lowest degree first.
    pub hilbert_polynomial: Vec<String>,
    /// Numerator of the Hilbert series over `(1−t)^{n+1}`.
    pub hilbert_numerator: Vec<String>,
    pub tau: Option<i64>,
}

impl SigmaSummary {
    fn new(s: &SigmaInvariants) -> SigmaSummary {
        SigmaSummary {
            s: s.s,
            deg_sigma: small(&s.deg_sigma),
            hilbert_polynomial: s.hilbert_polynomial().iter().map(ToString::to_string).collect(),
            hilbert_numerator: s.hilbert.numerator.iter().map(ToString::to_string).collect(),
            tau: s.tau.as_ref().map(small),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TjurinaSummary {
    pub tau: i64,
    pub r: i64,
    pub bound: i64,
    pub class: TjurinaClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrangementCheck {
    pub declared: bool,
    pub verified: bool,
    #[serde(serialize_with = "serial::polys")]
    pub factors: Vec<Polynomial>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSummary {
    pub k_max: u32,
    pub counts: Vec<GeneratorCount>,
    /// `dim D₀(f)_k` read off the Hilbert function of `S/J_f`.
    pub groebner_dimensions: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypersurfaceReport {
    pub vars: Vec<String>,
    #[serde(serialize_with = "serial::poly")]
    pub f: Polynomial,
    pub d: u32,
    pub n: usize,
    pub reduced: bool,
    pub cone: bool,
    pub warnings: Vec<String>,
    pub syzygies: SyzygySet,
    pub classification: Classification,
    pub pog: Option<PogStructure>,
    pub sigma: SigmaSummary,
    pub jacobian_resolution_shifts: Vec<Vec<i64>>,
    pub derivation_resolution_shifts: Vec<Vec<i64>>,
    /// `ε_j = e′_j − d_{j+2}` for plane curves.
    pub epsilon_shifts: Option<Vec<i64>>,
    pub bourbaki_results: Vec<BourbakiResult>,
    pub tame_scan: TameScan,
    pub b_of_v: Option<u32>,
    pub tjurina: Option<TjurinaSummary>,
    pub arrangement: Option<ArrangementCheck>,
    pub oracle: Option<OracleSummary>,
    pub identity_checks: Vec<IdentityCheck>,
}

impl HypersurfaceReport {
    /// The stored Bourbaki result for `subset`, in any order.
    pub fn bourbaki_for(&self, subset: &[usize]) -> Option<&BourbakiResult> {
        let mut key = subset.to_vec();
        key.sort_unstable();
        self.bourbaki_results.iter().find(|r| {
            let mut s = r.subset.clone();
            s.sort_unstable();
            s == key
        })
    }

    /// Tameness of `subset` from the scan or the stored Bourbaki results.
    pub fn tame_for(&self, subset: &[usize]) -> Option<bool> {
        let mut key = subset.to_vec();
        key.sort_unstable();
        self.tame_scan
            .verdicts
            .iter()
            .find(|v| v.subset == key)
            .map(|v| v.tame)
            .or_else(|| self.bourbaki_for(subset).map(|r| r.tame))
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.identity_checks.iter().filter(|c| c.failed())
    }
}

/// `dim D₀(f)_k = (n+1)·C(k+n, n) − C(k+d−1+n, n) + HF(S/J_f, k+d−1)`.
pub fn groebner_dimension(sigma: &SigmaInvariants, n: usize, d: u32, k: u32) -> i64 {
    let c = |a: i64| -> BigInt {
        if a < 0 {
            BigInt::from(0)
        } else {
            binomial(BigInt::from(a + n as i64), BigInt::from(n as i64))
        }
    };
    let top = k as i64 + d as i64 - 1;
    let v = BigInt::from(n as i64 + 1) * c(k as i64) - c(top) + sigma.hilbert.hilbert_function(top);
    small(&v)
}

/// Graded Betti shifts of `S/J_f`. The first `n` steps come from Gröbner
/// computations; the last free module of the minimal resolution is then
/// fixed by the Hilbert series numerator.
fn jacobian_betti(f: &Polynomial, n: usize, numerator: &[BigInt]) -> Result<Vec<Vec<i64>>> {
    let mut shifts = resolve_ideal(f.ring(), &f.gradient(), n)?.betti_shifts();
    shifts.resize(n + 1, Vec::new());
    // Σ_i (−1)^i Σ_j t^{−a_ij} = numerator
    let mut rest: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (k, c) in numerator.iter().enumerate() {
        *rest.entry(k as i64).or_default() += c;
    }
    for (i, step) in shifts.iter().enumerate() {
        for a in step {
            let e = rest.entry(-a).or_default();
            if i % 2 == 0 {
                *e -= 1;
            } else {
                *e += 1;
            }
        }
    }
    let mut last = Vec::new();
    for (k, c) in rest {
        let c = if (n + 1) % 2 == 0 { c } else { -c };
        if c.is_negative() {
            return Err(Error::Invalid(format!("negative Betti number in degree {k}")));
        }
        last.extend(std::iter::repeat(-k).take(small(&c) as usize));
    }
    last.sort_unstable_by(|a, b| b.cmp(a));
    while shifts.last().is_some_and(Vec::is_empty) {
        shifts.pop();
    }
    if !last.is_empty() {
        shifts.push(last);
    }
    Ok(shifts)
}

/// `D₀(f)` is the kernel of `F_1 → F_0`, so its resolution is the tail of
/// the resolution of `S/J_f`, twisted by `d − 1`.
fn derivation_resolution(jacobian: &[Vec<i64>], d: u32) -> Vec<Vec<i64>> {
    jacobian
        .iter()
        .skip(2)
        .map(|s| s.iter().map(|a| a + d as i64 - 1).collect())
        .collect()
}

/// Run the whole pipeline on `f`.
pub fn analyze(f: &Polynomial, opts: &AnalysisOptions) -> Result<HypersurfaceReport> {
    let syz = jacobian_syzygies_with(f, &opts.declared)?;
    let ring = f.ring();
    let (n, d) = (syz.n, syz.d);
    let mut warnings = Vec::new();
    if syz.low_degree {
        warnings.push(format!("degree {d} is below 3; results are outside the usual range"));
    }
    let (classification, pog) = classify(&syz)?;
    let sigma = sigma_invariants(f)?;
    let jacobian_resolution_shifts = jacobian_betti(f, n, &sigma.hilbert.numerator)?;
    let derivation_resolution_shifts = derivation_resolution(&jacobian_resolution_shifts, d);
    let epsilon_shifts = (n == 2).then(|| {
        let mut e: Vec<i64> = derivation_resolution_shifts
            .get(1)
            .map(|s| s.iter().map(|x| -x).collect())
            .unwrap_or_default();
        e.sort_unstable();
        e.iter()
            .enumerate()
            .map(|(j, e)| e - syz.sorted_degrees[j + 2] as i64)
            .collect()
    });

    let scan = tame_scan(&syz, opts.scan_limit)?;
    let mut subsets: Vec<Vec<usize>> = vec![(0..n - 1).collect()];
    if let Some(p) = &pog {
        for o in [&p.witness_ordering, &p.equal_top_ordering].into_iter().flatten() {
            subsets.push(o[..n - 1].to_vec());
        }
    }
    if let Some(best) = scan.verdicts.iter().find(|v| v.tame) {
        subsets.push(best.subset.clone());
    }
    let mut bourbaki_results: Vec<BourbakiResult> = Vec::new();
    for s in subsets {
        let mut key = s.clone();
        key.sort_unstable();
        let seen = bourbaki_results.iter().any(|r| {
            let mut t = r.subset.clone();
            t.sort_unstable();
            t == key
        });
        if !seen {
            bourbaki_results.push(bourbaki(&syz, &s, opts.check_saturation)?);
        }
    }

    let summary = SigmaSummary::new(&sigma);
    let tjurina = (n == 2 && sigma.s <= 0).then(|| {
        let tau = summary.deg_sigma;
        let r = syz.mdr() as i64;
        TjurinaSummary {
            tau,
            r,
            bound: tjurina_bound(d as i64, r),
            class: classify_by_tjurina(tau, d as i64, r),
        }
    });
    let arrangement = opts.arrangement.then(|| {
        let factors = linear_factors(f);
        if factors.is_none() {
            warnings.push(
                "declared arrangement could not be factored into linear forms; \
                 arrangement-only checks skipped"
                    .into(),
            );
        }
        ArrangementCheck {
            declared: true,
            verified: factors.is_some(),
            factors: factors.unwrap_or_default(),
        }
    });
    let oracle = match opts.oracle_degree {
        Some(k) => Some(OracleSummary {
            k_max: k,
            counts: minimal_generator_counts(f, k)?,
            groebner_dimensions: (0..=k).map(|j| groebner_dimension(&sigma, n, d, j)).collect(),
        }),
        None => None,
    };
    let b_of_v = scan.b_of_v;
    let mut report = HypersurfaceReport {
        vars: ring.names().to_vec(),
        f: f.clone(),
        d,
        n,
        reduced: true,
        cone: false,
        warnings,
        syzygies: syz,
        classification,
        pog,
        sigma: summary,
        jacobian_resolution_shifts,
        derivation_resolution_shifts,
        epsilon_shifts,
        bourbaki_results,
        tame_scan: scan,
        b_of_v,
        tjurina,
        arrangement,
        oracle,
        identity_checks: Vec::new(),
    };
    if opts.check_identities {
        report.identity_checks = verify_identities(&report);
    }
    Ok(report)
}
