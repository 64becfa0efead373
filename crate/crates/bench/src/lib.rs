//! Inputs shared by the benchmarks.

use jacsyz_core::{parse_polynomial, Polynomial, Ring};

/// Named hypersurfaces, from cheap to expensive.
pub const CASES: &[(&str, &[&str], &str)] = &[
    ("nodal_cubic", &["x", "y", "z"], "x^3+y^3-x*y*z"),
    ("four_lines", &["x", "y", "z"], "x*y*z*(x+y+z)"),
    ("xyz_minus_w3", &["x", "y", "z", "w"], "x*y*z-w^3"),
    ("two_quadric_cones", &["x", "y", "z", "w"], "(x^2+y^2-z^2)*(x^2+y^2-w^2)"),
    ("quartic_threefold", &["x", "y", "z", "u", "v"], "(x^2+y^2+z^2)^2-2*u^2*v^2"),
];

pub fn case(name: &str) -> Polynomial {
    let (_, vars, f) = CASES.iter().find(|c| c.0 == name).expect("known case");
    let ring = Ring::new(vars).expect("valid variables");
    parse_polynomial(f, &ring).expect("valid polynomial")
}
