//! Shared helpers for the integration targets.
#![allow(dead_code)]

use std::path::PathBuf;

use jacsyz_cli::{InputSpec, Problem};
use jacsyz_core::invariants::{is_cone, is_reduced};
use jacsyz_core::{Monomial, Polynomial, Rational, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.jsz"))
}

pub fn fixture(name: &str) -> Problem {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    InputSpec::parse(&text).unwrap().build().unwrap()
}

/// Every fixture that defines a reduced non-cone hypersurface.
pub const GOOD_FIXTURES: &[&str] = &[
    "triangle",
    "tetrahedron",
    "fermat_cubic",
    "four_lines",
    "cubic_isolated",
    "two_quadric_cones",
    "planes_and_quadric",
    "quartic_nonstrict_pog",
    "quadric_cone_times_planes",
    "two_quadrics_p4",
    "smooth_quadric_p4",
    "three_cubics",
];

/// A sparse random form with small integer coefficients.
pub fn random_form(rng: &mut ChaCha8Rng, ring: &Ring, degree: u32) -> Polynomial {
    let monos = Monomial::all_of_degree(ring.nvars(), degree);
    let nterms = rng.gen_range(ring.nvars()..=ring.nvars() + 4);
    let terms: Vec<(Monomial, Rational)> = (0..nterms)
        .map(|_| {
            let m = monos[rng.gen_range(0..monos.len())];
            let mut c = rng.gen_range(-3i64..=3);
            if c == 0 {
                c = 1;
            }
            (m, Rational::from_integer(c.into()))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// `count` reduced, non-cone forms in 3 or 4 variables of degree 3 to 5,
/// reproducible from `seed`.
pub fn random_reduced_forms(seed: u64, count: usize) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rings = [Ring::standard(3).unwrap(), Ring::standard(4).unwrap()];
    let mut out = Vec::new();
    while out.len() < count {
        let ring = &rings[out.len() % 2];
        let degree = rng.gen_range(3..=5);
        let f = random_form(&mut rng, ring, degree);
        if f.is_zero() || !f.is_homogeneous() {
            continue;
        }
        if is_reduced(&f).unwrap() && !is_cone(&f).unwrap() {
            out.push(f);
        }
    }
    out
}
