use super::*;
use crate::polyring::{parse_polynomial, ModuleVector, MonomialOrder, Polynomial, Ring};

fn ring(names: &[&str]) -> Ring {
    Ring::new(names).unwrap()
}

fn polys(r: &Ring, texts: &[&str]) -> Vec<Polynomial> {
    texts.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()
}

fn ideal(r: &Ring, texts: &[&str]) -> Ideal {
    Ideal::new(r, polys(r, texts)).unwrap()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = ring(&["x", "y"]);
    let gb = groebner_basis(&r, &polys(&r, &["x^2", "x*y"]), MonomialOrder::DegRevLex).unwrap();
    let mut got = strings(&gb.polynomials());
    got.sort();
    assert_eq!(got, vec!["x*y", "x^2"]);
    assert!(gb.is_reduced() && gb.is_interreduced());
    assert!(gb.satisfies_buchberger_criterion());
}

#[test]
fn twisted_cubic_basis() {
    let r = ring(&["x", "y", "z", "w"]);
    let gens = polys(&r, &["x*z-y^2", "y*w-z^2", "x*w-y*z"]);
    let gb = groebner_basis(&r, &gens, MonomialOrder::DegRevLex).unwrap();
    assert_eq!(gb.len(), 3);
    assert!(gb.satisfies_buchberger_criterion());
    let lex = groebner_basis(&r, &gens, MonomialOrder::Lex).unwrap();
    assert!(lex.satisfies_buchberger_criterion());
    for g in &gens {
        assert!(lex.contains_poly(g));
    }
    assert!(!gb.contains_poly(&parse_polynomial("x*y", &r).unwrap()));
}

#[test]
fn normal_forms() {
    let r = ring(&["x", "y"]);
    let gb = groebner_basis(&r, &polys(&r, &["x"]), MonomialOrder::DegRevLex).unwrap();
    assert!(normal_form(&parse_polynomial("x^2", &r).unwrap(), &gb).unwrap().is_zero());
    let y = parse_polynomial("y", &r).unwrap();
    assert_eq!(normal_form(&y, &gb).unwrap(), y);
    let gb2 = groebner_basis(&r, &polys(&r, &["2*x+y"]), MonomialOrder::DegRevLex).unwrap();
    let nf = normal_form(&parse_polynomial("x^2/3", &r).unwrap(), &gb2).unwrap();
    // x ≡ -y/2, so x²/3 ≡ y²/12
    assert_eq!(nf, parse_polynomial("y^2/12", &r).unwrap());
}

#[test]
fn euler_identity_reduces_to_zero() {
    let r = ring(&["x", "y", "z", "w"]);
    let f = parse_polynomial("(x^2+y^2-z*w)^2-2*w^4", &r).unwrap();
    let mut e = Polynomial::zero(&r);
    for (i, g) in f.gradient().iter().enumerate() {
        e = e + &Polynomial::var(&r, i) * g;
    }
    e = e - f.scale(&crate::Rational::from_integer(4.into()));
    let gb = groebner_basis(&r, &[], MonomialOrder::DegRevLex).unwrap();
    assert!(normal_form(&e, &gb).unwrap().is_zero());
}

#[test]
fn koszul_syzygy() {
    let r = ring(&["x", "y"]);
    let syz = polynomial_syzygies(&r, &polys(&r, &["x", "y"])).unwrap();
    assert_eq!(syz.len(), 1);
    let s = &syz[0];
    assert_eq!(s.shifts(), &[1, 1]);
    let x = Polynomial::var(&r, 0);
    let y = Polynomial::var(&r, 1);
    assert!((s.entry(0) * &x + s.entry(1) * &y).is_zero());
    assert_eq!(s.entry(0).degree(), Some(1));
}

#[test]
fn module_basis_and_membership() {
    let r = ring(&["x", "y", "z"]);
    let v = |a: &str, b: &str| {
        ModuleVector::unshifted(polys(&r, &[a, b])).unwrap()
    };
    let gens = vec![v("x", "y"), v("y", "z")];
    for order in [pot_order(vec![0, 0]), top_order(vec![0, 0])] {
        let gb = module_groebner_basis(&r, &gens, order).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        assert!(gb.contains(&v("x*z-y^2", "0")).unwrap());
        assert!(!gb.contains(&v("x", "0")).unwrap());
        let nf = gb.normal_form(&v("x*y+y^2", "y^2+y*z")).unwrap();
        assert!(nf.is_zero());
    }
}

#[test]
fn syzygies_are_sound_for_jacobian_partials() {
    let r = ring(&["x", "y", "z", "w"]);
    let f = parse_polynomial("x*y*z-w^3", &r).unwrap();
    let partials = f.gradient();
    let syz = polynomial_syzygies(&r, &partials).unwrap();
    assert!(!syz.is_empty());
    for s in &syz {
        assert!(s.dot(&partials).unwrap().is_zero());
        assert!(s.is_homogeneous());
    }
    let mut degs: Vec<i64> = minimal_generators(&r, &syz)
        .unwrap()
        .iter()
        .map(|s| s.degree().unwrap() - 2)
        .collect();
    degs.sort();
    assert_eq!(degs, vec![1, 1, 2, 2, 2]);
}

#[test]
fn resolution_of_a_hyperplane() {
    let r = ring(&["x", "y", "z"]);
    let res = resolve_ideal(&r, &polys(&r, &["x"]), 3).unwrap();
    assert_eq!(res.shifts, vec![vec![0], vec![-1]]);
    assert!(res.is_complex().unwrap() && res.is_minimal());
}

#[test]
fn koszul_resolution_of_the_maximal_ideal() {
    let r = ring(&["x", "y", "z"]);
    let res = resolve_ideal(&r, &polys(&r, &["x", "y", "z", "x+y"]), 4).unwrap();
    assert_eq!(
        res.betti_shifts(),
        vec![vec![0], vec![-1; 3], vec![-2; 3], vec![-3]]
    );
    assert!(res.is_complex().unwrap() && res.is_minimal());
}

#[test]
fn minimalize_removes_unit_relations() {
    let r = ring(&["x", "y"]);
    // generators e1 (deg 1), e2 (deg 1), e3 (deg 2); relations e2 = e1 and x*e1 = e3.
    let rel = crate::PolyMatrix::from_rows(vec![
        polys(&r, &["1", "x"]),
        polys(&r, &["-1", "0"]),
        polys(&r, &["0", "-1"]),
    ])
    .unwrap();
    let p = Presentation::new(&r, vec![1, 1, 2], rel).unwrap();
    assert!(!p.minimal);
    let m = p.minimalize().unwrap();
    assert!(m.minimal);
    assert_eq!(m.generator_shifts, vec![1]);
    assert_eq!(m.relations.cols(), 0);
    let again = m.minimalize().unwrap();
    assert_eq!(again.generator_shifts, m.generator_shifts);
}

#[test]
fn ideal_operations() {
    let r = ring(&["x", "y"]);
    let q = ideal(&r, &["x^2"]).colon(&Polynomial::var(&r, 0)).unwrap();
    assert!(q.same_as(&ideal(&r, &["x"])).unwrap());
    let i = ideal(&r, &["x"]).intersection(&ideal(&r, &["y"])).unwrap();
    assert!(i.same_as(&ideal(&r, &["x*y"])).unwrap());
    let c = ideal(&r, &["x^2", "x*y"]).colon_max().unwrap();
    assert!(c.same_as(&ideal(&r, &["x"])).unwrap());
    assert!(ideal(&r, &["x", "y"]).colon_max().unwrap().is_unit().unwrap());
    let affine = ideal(&r, &["x", "y+1"]);
    assert!(affine.colon_max().unwrap().same_as(&affine).unwrap());
    assert!(ideal(&r, &["x"]).colon(&Polynomial::zero(&r)).is_err());
}
