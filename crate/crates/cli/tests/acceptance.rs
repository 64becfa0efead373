//! Acceptance criteria, one line per criterion.

mod common;

use std::time::{Duration, Instant};

use common::{fixture, random_reduced_forms, GOOD_FIXTURES};
use jacsyz_cli::Problem;
use jacsyz_core::groebner::Ideal;
use jacsyz_core::hypersurface::{
    bourbaki, groebner_dimension, is_tame, jacobian_syzygies, jacobian_syzygies_with, pog_structure,
    subset_verdict, tame_scan, BourbakiMap, SyzygySet, TjurinaClass,
};
use jacsyz_core::invariants::{sigma_invariants, Height};
use jacsyz_core::oracle::{graded_dimensions, minimal_generator_counts, tameness_direct_check, DirectCheck};
use jacsyz_core::polyring::combinations;
use jacsyz_core::{
    analyze, euler_vector, parse_polynomial, AnalysisOptions, Classification, HypersurfaceReport, ModuleVector,
    Polynomial, Rational,
};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn poly(p: &Problem, s: &str) -> Polynomial {
    parse_polynomial(s, &p.ring).unwrap()
}

fn declared(p: &Problem) -> Result<SyzygySet, String> {
    jacobian_syzygies_with(&p.f, &p.declared).map_err(err)
}

fn idx(syz: &SyzygySet, names: &[&str]) -> Vec<usize> {
    names.iter().map(|n| syz.index_of(n).expect("named generator")).collect()
}

fn full(p: &Problem, with_declared: bool) -> Result<HypersurfaceReport, String> {
    let opts = AnalysisOptions {
        declared: if with_declared { p.declared.clone() } else { Vec::new() },
        arrangement: p.arrangement,
        ..Default::default()
    };
    analyze(&p.f, &opts).map_err(err)
}

fn no_failures(r: &HypersurfaceReport) -> Outcome {
    let failed: Vec<String> = r.failed_checks().map(|c| format!("{} ({} vs {})", c.name, c.lhs, c.rhs)).collect();
    ensure!(failed.is_empty(), "failed checks: {}", failed.join("; "));
    Ok(())
}

fn combination(syz: &SyzygySet, coeffs: &[(&str, Polynomial)]) -> Result<ModuleVector, String> {
    let mut acc: Option<ModuleVector> = None;
    for (name, c) in coeffs {
        let v = syz.generators[syz.index_of(name).expect("named")].scale(c);
        acc = Some(match acc {
            None => v,
            Some(a) => a.checked_add(&v).map_err(err)?,
        });
    }
    Ok(acc.expect("nonempty"))
}

fn two_quadric_cones() -> Outcome {
    let p = fixture("two_quadric_cones");
    let computed = jacobian_syzygies(&p.f).map_err(err)?;
    ensure!(computed.m == 7, "m = {}", computed.m);
    ensure!(computed.sorted_degrees == vec![2; 7], "exponents {:?}", computed.sorted_degrees);
    let syz = declared(&p)?;
    ensure!(syz.m == 7 && syz.declared == 7, "declared set is not minimal");
    let s12 = idx(&syz, &["rho1", "rho2"]);
    ensure!(!is_tame(&syz, &s12).map_err(err)?, "(rho1,rho2) reported tame");
    let rho4 = &syz.generators[syz.index_of("rho4").unwrap()];
    let vs: Vec<ModuleVector> = s12.iter().map(|&i| syz.generators[i].clone()).collect();
    let map = BourbakiMap::new(&p.f, &vs).map_err(err)?;
    ensure!(map.apply(rho4).map_err(err)?.is_zero(), "v(rho4) is not zero");
    match tameness_direct_check(&p.f, &vs, 2, std::slice::from_ref(rho4)).map_err(err)? {
        DirectCheck::Fail { degree: 2, witness } if &witness == rho4 => {}
        other => return Err(format!("direct check on (rho1,rho2): {other:?}")),
    }
    let s16 = idx(&syz, &["rho1", "rho6"]);
    let v = subset_verdict(&syz, &s16).map_err(err)?;
    ensure!(v.minors_height.value == 2, "height of I(rho1,rho6) = {}", v.minors_height.value);
    ensure!(v.tame, "(rho1,rho6) not tame");
    let vs: Vec<ModuleVector> = s16.iter().map(|&i| syz.generators[i].clone()).collect();
    let direct = tameness_direct_check(&p.f, &vs, 4, &[]).map_err(err)?;
    ensure!(matches!(direct, DirectCheck::Pass { .. }), "direct check on (rho1,rho6): {direct:?}");
    let scan = tame_scan(&syz, None).map_err(err)?;
    ensure!(scan.b_of_v == Some(4), "b(V) = {:?}", scan.b_of_v);
    Ok(())
}

fn planes_and_quadric() -> Outcome {
    let p = fixture("planes_and_quadric");
    let r = full(&p, false)?;
    ensure!(r.syzygies.m == 4, "m = {}", r.syzygies.m);
    ensure!(r.syzygies.sorted_degrees == [1, 1, 2, 2], "exponents {:?}", r.syzygies.sorted_degrees);
    let want = vec![vec![0], vec![-3; 4], vec![-4, -4, -5, -5], vec![-6]];
    ensure!(r.jacobian_resolution_shifts == want, "J_f shifts {:?}", r.jacobian_resolution_shifts);
    ensure!(r.classification == Classification::NearlyFree, "classified {}", r.classification.tag());
    let b = r.bourbaki_for(&[0, 1]).ok_or("no Bourbaki result for the degree-one pair")?;
    ensure!(b.tame, "not tame");
    let target = Ideal::new(&p.ring, vec![poly(&p, "y"), poly(&p, "2*x+z")]).map_err(err)?;
    ensure!(b.ideal().map_err(err)?.same_as(&target).map_err(err)?, "B = {:?}", b.bourbaki_basis);
    no_failures(&r)
}

fn quartic_nonstrict_pog() -> Outcome {
    let p = fixture("quartic_nonstrict_pog");
    let syz = declared(&p)?;
    let rel = combination(&syz, &[("rho1", poly(&p, "x")), ("rho2", poly(&p, "-w")), ("rho3", poly(&p, "-y"))])?;
    ensure!(rel.is_zero(), "x rho1 - w rho2 - y rho3 = {rel:?}");
    let ps = pog_structure(&syz).map_err(err)?.ok_or("not plus-one generated")?;
    ensure!(!ps.strict_in_given_order, "listed order is strict");
    let want = idx(&syz, &["rho4", "rho2", "rho3", "rho1"]);
    ensure!(ps.witness_ordering.as_ref() == Some(&want), "witness {:?}", ps.witness_ordering);
    let e: Vec<u32> = want.iter().map(|&i| syz.degrees[i]).collect();
    ensure!(e == [2, 1, 1, 1], "reordered exponents {e:?}");
    let r = full(&p, true)?;
    ensure!(r.classification == Classification::PogStrict, "classified {}", r.classification.tag());
    ensure!((r.sigma.s, r.sigma.deg_sigma) == (1, 6), "sigma ({}, {})", r.sigma.s, r.sigma.deg_sigma);
    // d = d1 + d2 + d3 and deg Σ = Σ d_i² + e2 − Σ all d_j
    ensure!(e[0] + e[1] + e[2] == 4, "2+1+1 != 4");
    let first: Vec<i64> = e[..3].iter().map(|&x| x as i64).collect();
    let sq: i64 = first.iter().map(|x| x * x).sum();
    let e2 = first[0] * first[1] + first[0] * first[2] + first[1] * first[2];
    let total: i64 = e.iter().map(|&x| x as i64).sum();
    ensure!(sq + e2 - total == 6 && sq == 6 && e2 == 5 && total == 5, "6+5-5 != 6");
    ensure!(is_tame(&syz, &idx(&syz, &["rho4", "rho2"])).map_err(err)?, "(rho4,rho2) not tame");
    ensure!(!is_tame(&syz, &idx(&syz, &["rho1", "rho2"])).map_err(err)?, "(rho1,rho2) tame");
    let strict_bound = r
        .identity_checks
        .iter()
        .find(|c| c.name.starts_with("tame_singular_degree_upper_bound (rho4,rho2)"))
        .ok_or("no tame degree bound for (rho4,rho2)")?;
    ensure!(strict_bound.lhs == "6" && strict_bound.rhs == "7", "bound {} vs {}", strict_bound.lhs, strict_bound.rhs);
    no_failures(&r)
}

fn cubic_isolated() -> Outcome {
    let p = fixture("cubic_isolated");
    let syz = declared(&p)?;
    ensure!(syz.m == 5, "m = {}", syz.m);
    ensure!(syz.degrees == [1, 1, 2, 2, 2], "degrees {:?}", syz.degrees);
    let r = full(&p, true)?;
    ensure!(r.sigma.s == 0, "dim sigma = {}", r.sigma.s);
    let s = idx(&syz, &["rho1", "rho2"]);
    let v = subset_verdict(&syz, &s).map_err(err)?;
    ensure!(v.tame && v.minors_height.value >= 2, "height test: {:?}", v.minors_height);
    let vs: Vec<ModuleVector> = s.iter().map(|&i| syz.generators[i].clone()).collect();
    let direct = tameness_direct_check(&p.f, &vs, 4, &[]).map_err(err)?;
    ensure!(matches!(direct, DirectCheck::Pass { .. }), "direct check: {direct:?}");
    no_failures(&r)
}

fn three_cubics() -> Outcome {
    let p = fixture("three_cubics");
    let computed = jacobian_syzygies(&p.f).map_err(err)?;
    ensure!(computed.m == 8, "m = {}", computed.m);
    ensure!(computed.sorted_degrees == [1, 4, 4, 7, 7, 8, 8, 8], "exponents {:?}", computed.sorted_degrees);
    let sigma = sigma_invariants(&p.f).map_err(err)?;
    let q = |n: i64| Rational::from_integer(n.into());
    ensure!(sigma.hilbert_polynomial() == [q(-119), q(38)], "HP {:?}", sigma.hilbert_polynomial());
    let syz = declared(&p)?;
    ensure!(syz.declared == 4 && syz.m == 8, "declared set not completed to 8 generators");
    let h = |names: &[&str]| -> Result<Height, String> {
        Ok(subset_verdict(&syz, &idx(&syz, names)).map_err(err)?.minors_height)
    };
    ensure!(h(&["rho1", "rho2"])?.value == 1, "height(rho1,rho2) != 1");
    ensure!(h(&["rho1", "rho3"])?.value == 1, "height(rho1,rho3) != 1");
    ensure!(h(&["rho1", "rho8"])?.value == 2, "height(rho1,rho8) != 2");
    Ok(())
}

fn quadric_cone_times_planes() -> Outcome {
    let p = fixture("quadric_cone_times_planes");
    let computed = jacobian_syzygies(&p.f).map_err(err)?;
    ensure!(computed.m == 5 && computed.sorted_degrees == [1; 5], "exponents {:?}", computed.sorted_degrees);
    let syz = declared(&p)?;
    ensure!(syz.m == 5 && syz.declared == 5, "declared set is not a minimal generating set");
    let rel = combination(&syz, &[("rho2", poly(&p, "x")), ("rho4", poly(&p, "z")), ("rho5", poly(&p, "-y"))])?;
    ensure!(rel.is_zero(), "x rho2 + z rho4 - y rho5 != 0");
    let r = full(&p, true)?;
    let want = vec![vec![0], vec![-3; 5], vec![-4; 5], vec![-5]];
    ensure!(r.jacobian_resolution_shifts == want, "J_f shifts {:?}", r.jacobian_resolution_shifts);
    ensure!(r.classification == Classification::NearlyFree, "classified {}", r.classification.tag());
    no_failures(&r)
}

fn two_quadrics_p4() -> Outcome {
    let p = fixture("two_quadrics_p4");
    let r = full(&p, false)?;
    let degs = &r.syzygies.sorted_degrees;
    ensure!(degs.len() == 10, "m = {}", degs.len());
    ensure!(degs.iter().filter(|&&d| d == 1).count() == 4 && degs.iter().filter(|&&d| d == 3).count() == 6, "{degs:?}");
    // m ≤ C(5,2)(d+1)/3 = 50/3
    ensure!(3 * r.syzygies.m <= 10 * 5, "bound 16.67 violated");
    let counts = minimal_generator_counts(&p.f, 4).map_err(err)?;
    let mu: Vec<usize> = counts.iter().map(|c| c.mu).collect();
    ensure!(mu == [0, 4, 0, 6, 0], "oracle mu {mu:?}");
    no_failures(&r)
}

fn free_fixtures() -> Outcome {
    let p = fixture("triangle");
    let r = full(&p, false)?;
    ensure!(r.syzygies.sorted_degrees == [1, 1], "xyz exponents {:?}", r.syzygies.sorted_degrees);
    let t = r.tjurina.as_ref().ok_or("no Tjurina summary")?;
    ensure!(t.tau == 3 && t.bound == 3 && t.class == TjurinaClass::Free, "tau {} bound {}", t.tau, t.bound);
    ensure!(r.classification == Classification::Free, "xyz classified {}", r.classification.tag());
    no_failures(&r)?;
    let p = fixture("tetrahedron");
    let r = full(&p, false)?;
    ensure!(r.syzygies.sorted_degrees == [1, 1, 1], "xyzw exponents {:?}", r.syzygies.sorted_degrees);
    ensure!(r.sigma.deg_sigma == 6, "deg sigma {}", r.sigma.deg_sigma);
    ensure!(r.classification == Classification::Free, "xyzw classified {}", r.classification.tag());
    no_failures(&r)?;
    for name in ["triangle", "tetrahedron"] {
        let p = fixture(name);
        let syz = jacobian_syzygies(&p.f).map_err(err)?;
        for s in combinations(syz.m, syz.n - 1) {
            let b = bourbaki(&syz, &s, false).map_err(err)?;
            ensure!(b.is_unit, "{name}: B({s:?}) is not S");
        }
    }
    Ok(())
}

fn smooth_fixtures() -> Outcome {
    let p = fixture("fermat_cubic");
    let r = full(&p, false)?;
    ensure!(r.syzygies.m == 3 && r.syzygies.sorted_degrees == [2, 2, 2], "exponents {:?}", r.syzygies.sorted_degrees);
    ensure!(r.sigma.s == -1, "sigma not empty");
    let (d1, d2) = (r.syzygies.sorted_degrees[0], r.syzygies.sorted_degrees[1]);
    ensure!(d1 + d2 == 4 && d1 + d2 > r.d - 1, "4 > 3 fails");
    ensure!(!r.classification.is_pog(), "classified {}", r.classification.tag());
    no_failures(&r)?;
    let p = fixture("smooth_quadric_p4");
    let r = full(&p, false)?;
    ensure!(r.syzygies.m == 10, "m = {}", r.syzygies.m);
    // C(5,2)(d+1)/3 = 10
    ensure!(3 * r.syzygies.m == 10 * (r.d as usize + 1), "bound not attained");
    no_failures(&r)
}

/// Property ledger on one hypersurface.
fn properties_of(f: &Polynomial, r: &HypersurfaceReport) -> Outcome {
    let ring = f.ring();
    let grad = f.gradient();
    let d = Rational::from_integer((r.d as i64).into());
    ensure!(euler_vector(ring).dot(&grad).map_err(err)? == f.scale(&d), "Euler identity fails for {f}");
    for g in &r.syzygies.generators {
        ensure!(g.dot(&grad).map_err(err)?.is_zero(), "{f}: generator is not a syzygy");
    }
    ensure!(r.syzygies.m >= r.n, "{f}: m < n");
    ensure!(r.syzygies.sorted_degrees[0] >= 1, "{f}: d1 = 0");
    let syz = &r.syzygies;
    for b in &r.bourbaki_results {
        ensure!(b.vanishing_ok && b.degrees_ok, "{f}: Bourbaki map on {:?}", b.subset_names);
        if b.tame {
            ensure!(b.saturated != Some(false), "{f}: tame but B not saturated");
            ensure!(b.minimal_generators.len() == syz.m - syz.n + 1, "{f}: tame but wrong generator count");
        }
        let vs: Vec<ModuleVector> = b.subset.iter().map(|&i| syz.generators[i].clone()).collect();
        let k = syz.sorted_degrees.last().copied().unwrap_or(0) + 1;
        let direct = tameness_direct_check(f, &vs, k, &[]).map_err(err)?;
        match direct {
            DirectCheck::Fail { .. } => ensure!(!b.tame, "{f}: direct check fails on a tame subset"),
            DirectCheck::Pass { .. } => ensure!(b.tame || b.minors_height.value <= 1, "{f}: verdict mismatch"),
            DirectCheck::Inconclusive { .. } => {}
        }
    }
    let k_max = syz.sorted_degrees.last().copied().unwrap_or(0) + 2;
    let dims = graded_dimensions(f, k_max).map_err(err)?;
    let sigma = sigma_invariants(f).map_err(err)?;
    for (k, &dim) in dims.iter().enumerate() {
        let g = groebner_dimension(&sigma, syz.n, syz.d, k as u32);
        ensure!(dim as i64 == g, "{f}: dim D0_{k} oracle {dim} vs groebner {g}");
    }
    no_failures(r)
}

fn property_suites() -> Outcome {
    for name in GOOD_FIXTURES {
        let p = fixture(name);
        let r = full(&p, false)?;
        properties_of(&p.f, &r).map_err(|e| format!("{name}: {e}"))?;
    }
    let forms = random_reduced_forms(0x5eed, 50);
    for f in &forms {
        let r = analyze(f, &AnalysisOptions::default()).map_err(|e| format!("{f}: {e}"))?;
        properties_of(f, &r)?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("two quadric cones: seven quadratic generators, witness and tame pair", two_quadric_cones, 30),
        ("two planes and a quadric cone: nearly free and tame", planes_and_quadric, 30),
        ("quartic with a double conic: strict after reordering", quartic_nonstrict_pog, 30),
        ("cubic xyz-w^3: degrees (1,1,2,2,2), tame pair", cubic_isolated, 30),
        ("degree nine surface: exponents, Hilbert polynomial, heights", three_cubics, 600),
        ("quadric cone times two planes: nearly free threefold", quadric_cone_times_planes, 60),
        ("quartic threefold: ten generators, bound, oracle counts", two_quadrics_p4, 60),
        ("free fixtures xyz and xyzw", free_fixtures, 30),
        ("smooth fixtures: Fermat cubic and quadric in P^4", smooth_fixtures, 30),
        ("property suites on fixtures and 50 random forms", property_suites, 900),
    ];
    let mut failures = 0;
    for (i, (label, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        let status = match (&outcome, over) {
            (Ok(()), false) => "PASS",
            _ => "FAIL",
        };
        if status == "FAIL" {
            failures += 1;
        }
        let mut line = format!("criterion {:>2} {status}  {label} ({:.2} s, limit {limit} s)", i + 1, took.as_secs_f64());
        if let Err(e) = &outcome {
            line.push_str(&format!(": {e}"));
        } else if over {
            line.push_str(": time limit exceeded");
        }
        println!("{line}");
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
