use super::*;
use crate::polyring::{parse_polynomial, Ring};

fn ideal(r: &Ring, texts: &[&str]) -> Ideal {
    Ideal::new(r, texts.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[test]
fn zero_and_maximal_ideals() {
    let r = Ring::standard(3).unwrap();
    let h = hilbert_series(&Ideal::zero(&r)).unwrap();
    assert_eq!(h.dimension, 3);
    assert_eq!(h.numerator, vec![BigInt::from(1)]);
    let h = hilbert_series(&Ideal::maximal(&r)).unwrap();
    assert_eq!(h.dimension, 0);
    assert!(h.polynomial.is_empty());
}

#[test]
fn heights() {
    let r = Ring::standard(4).unwrap();
    assert_eq!(height(&ideal(&r, &["x", "y"])).unwrap().value, 2);
    assert_eq!(height(&Ideal::zero(&r)).unwrap().value, 0);
    let unit = height(&Ideal::unit(&r)).unwrap();
    assert_eq!(unit, Height { value: 4, improper: true });
    let twisted = ideal(&r, &["x*z-y^2", "y*w-z^2", "x*w-y*z"]);
    assert_eq!(height(&twisted).unwrap().value, 2);
    assert_eq!(hilbert_series(&twisted).unwrap().degree, BigInt::from(3));
}

#[test]
fn saturation() {
    let r2 = Ring::standard(2).unwrap();
    let sat = saturate(&ideal(&r2, &["x^2", "x*y"])).unwrap();
    assert!(sat.same_as(&ideal(&r2, &["x"])).unwrap());
    let r = Ring::standard(3).unwrap();
    let sat = saturate(&ideal(&r, &["x^2", "x*y", "x*z"])).unwrap();
    assert!(sat.same_as(&ideal(&r, &["x"])).unwrap());
    let xy = ideal(&r, &["x", "y"]);
    assert!(is_saturated(&xy).unwrap());
    assert!(saturate(&xy).unwrap().same_as(&xy).unwrap());
    assert!(!is_saturated(&ideal(&r, &["x^2", "x*y", "x*z"])).unwrap());
}

#[test]
fn singular_subscheme_of_the_degree_nine_surface() {
    let r = Ring::standard(4).unwrap();
    let f = parse_polynomial("(x^3-y*z*w)^3+(w^3-x*y*z)^3", &r).unwrap();
    let s = sigma_invariants(&f).unwrap();
    assert_eq!(s.hilbert_polynomial(), &[q(-119), q(38)]);
    assert_eq!(s.s, 1);
    assert_eq!(s.deg_sigma, BigInt::from(38));
    assert_eq!(s.tau, None);
}

#[test]
fn smooth_cubic_has_empty_singular_locus() {
    let r = Ring::standard(3).unwrap();
    let s = sigma_invariants(&parse_polynomial("x^3+y^3+z^3", &r).unwrap()).unwrap();
    assert_eq!(s.s, -1);
    assert_eq!(s.deg_sigma, BigInt::from(0));
}

#[test]
fn quartic_with_double_conic() {
    let r = Ring::standard(4).unwrap();
    let s = sigma_invariants(&parse_polynomial("(x^2+y^2-z*w)^2-2*w^4", &r).unwrap()).unwrap();
    assert_eq!((s.s, s.deg_sigma), (1, BigInt::from(6)));
}

#[test]
fn nodal_cubic_tjurina() {
    let r = Ring::standard(3).unwrap();
    let s = sigma_invariants(&parse_polynomial("x*y*z", &r).unwrap()).unwrap();
    assert_eq!(s.tau, Some(BigInt::from(3)));
}

#[test]
fn reducedness_and_cones() {
    let r = Ring::standard(3).unwrap();
    assert!(!is_reduced(&parse_polynomial("x^2*y", &r).unwrap()).unwrap());
    assert!(matches!(
        sigma_invariants(&parse_polynomial("x^2*y", &r).unwrap()),
        Err(Error::NotReduced)
    ));
    let r4 = Ring::standard(4).unwrap();
    assert!(is_cone(&parse_polynomial("x*y*z", &r4).unwrap()).unwrap());
    assert!(is_cone(&parse_polynomial("x^2+2*x*y+y^2+z^2", &r).unwrap()).unwrap());
    assert!(!is_cone(&parse_polynomial("x^3+y^3+z^3", &r).unwrap()).unwrap());
    assert!(is_reduced(&parse_polynomial("x^3+y^3+z^3", &r).unwrap()).unwrap());
}
