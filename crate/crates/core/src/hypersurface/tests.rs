use super::*;
use crate::polyring::{parse_polynomial, ModuleVector, Polynomial, Ring};

fn setup(nvars: usize, f: &str) -> (Ring, Polynomial) {
    let r = Ring::standard(nvars).unwrap();
    let f = parse_polynomial(f, &r).unwrap();
    (r, f)
}

fn vector(r: &Ring, entries: &[&str]) -> ModuleVector {
    ModuleVector::unshifted(entries.iter().map(|e| parse_polynomial(e, r).unwrap()).collect()).unwrap()
}

fn declared(r: &Ring, list: &[(&str, &[&str])]) -> Vec<(String, ModuleVector)> {
    list.iter().map(|(n, e)| (n.to_string(), vector(r, e))).collect()
}

#[test]
fn normal_crossing_is_free() {
    let (_, f) = setup(3, "x*y*z");
    let syz = jacobian_syzygies(&f).unwrap();
    assert_eq!(syz.sorted_degrees, vec![1, 1]);
    assert!(syz.is_free());
    let (class, pog) = classify(&syz).unwrap();
    assert_eq!(class, Classification::Free);
    assert!(pog.is_none());
    let b = bourbaki(&syz, &[0], true).unwrap();
    assert!(b.tame && b.is_unit);
}

#[test]
fn rejects_bad_input() {
    let (r, f) = setup(3, "x^2*y");
    assert!(matches!(jacobian_syzygies(&f), Err(crate::Error::NotReduced)));
    let g = parse_polynomial("x^2+y^2", &r).unwrap();
    assert!(matches!(jacobian_syzygies(&g), Err(crate::Error::Cone)));
    let (r, f) = setup(3, "x*y*z");
    let bad = declared(&r, &[("rho1", &["x", "y", "z"])]);
    assert!(matches!(
        jacobian_syzygies_with(&f, &bad),
        Err(crate::Error::BadDeclaredSyzygy { .. })
    ));
    let syz = jacobian_syzygies(&f).unwrap();
    assert!(matches!(bourbaki(&syz, &[0, 1], false), Err(crate::Error::InvalidSubset(_))));
}

#[test]
fn declared_generators_come_first() {
    let (r, f) = setup(4, "x*y*z-w^3");
    let decl = declared(&r, &[("rho1", &["0", "y", "-z", "0"]), ("rho2", &["x", "0", "-z", "0"])]);
    let syz = jacobian_syzygies_with(&f, &decl).unwrap();
    assert_eq!(syz.m, 5);
    assert_eq!(syz.degrees, vec![1, 1, 2, 2, 2]);
    assert_eq!(syz.names[..2], ["rho1".to_string(), "rho2".to_string()]);
    let b = bourbaki(&syz, &[0, 1], true).unwrap();
    assert!(b.tame);
    assert_eq!(b.minors_height.value, 2);
}

#[test]
fn quartic_with_double_conic_is_strict_after_reordering() {
    let (r, f) = setup(4, "(x^2+y^2-z*w)^2-2*w^4");
    let decl = declared(
        &r,
        &[
            ("rho1", &["0", "w", "2*y", "0"]),
            ("rho2", &["-y", "x", "0", "0"]),
            ("rho3", &["w", "0", "2*x", "0"]),
            ("rho4", &["x*z", "y*z", "2*z^2-8*w^2", "2*x^2+2*y^2-2*z*w"]),
        ],
    );
    let syz = jacobian_syzygies_with(&f, &decl).unwrap();
    assert_eq!(syz.m, 4);
    let p = pog_structure(&syz).unwrap().expect("plus-one generated");
    assert!(!p.strict_in_given_order);
    assert_eq!(p.witness_ordering, Some(vec![3, 1, 2, 0]));
    assert!(is_tame(&syz, &[3, 1]).unwrap());
    assert!(!is_tame(&syz, &[0, 1]).unwrap());
    let rep = analyze(&f, &AnalysisOptions { declared: decl, ..Default::default() }).unwrap();
    assert_eq!(rep.classification, Classification::PogStrict);
    assert_eq!((rep.sigma.s, rep.sigma.deg_sigma), (1, 6));
    assert_eq!(rep.failed_checks().count(), 0, "{:?}", rep.failed_checks().collect::<Vec<_>>());
}

#[test]
fn planes_and_quadric_is_nearly_free() {
    let (r, f) = setup(4, "(x+y+z)*(x+2*y)*w*z+x*y*z*w");
    let rep = analyze(&f, &AnalysisOptions::default()).unwrap();
    assert_eq!(rep.syzygies.sorted_degrees, vec![1, 1, 2, 2]);
    assert_eq!(rep.classification, Classification::NearlyFree);
    assert_eq!(
        rep.jacobian_resolution_shifts,
        vec![vec![0], vec![-3; 4], vec![-4, -4, -5, -5], vec![-6]]
    );
    let b = rep.bourbaki_for(&[0, 1]).unwrap();
    assert!(b.tame);
    let want = crate::groebner::Ideal::new(
        &r,
        vec![parse_polynomial("y", &r).unwrap(), parse_polynomial("2*x+z", &r).unwrap()],
    )
    .unwrap();
    assert!(b.ideal().unwrap().same_as(&want).unwrap());
    assert_eq!(rep.failed_checks().count(), 0);
}

#[test]
fn two_quadric_cones_scan() {
    let (_, f) = setup(4, "(x^2-z*w)*(x^2+y^2+z^2)");
    let syz = jacobian_syzygies(&f).unwrap();
    assert_eq!(syz.sorted_degrees, vec![2; 7]);
    let scan = tame_scan(&syz, None).unwrap();
    assert!(scan.complete);
    assert_eq!(scan.total_subsets, 21);
    assert_eq!(scan.status, "found");
}

#[test]
fn bourbaki_map_annihilates_its_rows() {
    let (r, f) = setup(4, "x*y*z*w");
    let syz = jacobian_syzygies(&f).unwrap();
    let map = BourbakiMap::new(&f, &syz.generators[..2]).unwrap();
    for g in &syz.generators[..2] {
        assert!(map.apply(g).unwrap().is_zero());
    }
    assert!(map.apply(&crate::polyring::euler_vector(&r)).unwrap().is_zero());
    let v = map.apply(&syz.generators[2]).unwrap();
    assert_eq!(v.degree(), Some(0));
}

#[test]
fn fermat_cubic_is_not_pog() {
    let (_, f) = setup(3, "x^3+y^3+z^3");
    let rep = analyze(&f, &AnalysisOptions::default()).unwrap();
    assert_eq!(rep.syzygies.sorted_degrees, vec![2, 2, 2]);
    assert!(!rep.classification.is_pog());
    assert_eq!(rep.sigma.s, -1);
    assert_eq!(rep.epsilon_shifts, Some(vec![2]));
}

#[test]
fn last_betti_step_matches_a_full_resolution() {
    for (nv, f) in [(4, "(x+y+z)*(x+2*y)*w*z+x*y*z*w"), (4, "x*y*z-w^3"), (3, "x*y*z*(x+y+z)")] {
        let (r, f) = setup(nv, f);
        let full = crate::groebner::resolve_ideal(&r, &f.gradient(), nv).unwrap().betti_shifts();
        let rep = analyze(&f, &AnalysisOptions { check_identities: false, ..Default::default() }).unwrap();
        assert_eq!(rep.jacobian_resolution_shifts, full, "{f}");
    }
}
