//! Exact polynomial arithmetic over ℚ.

mod matrix;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use matrix::{combinations, ModuleVector, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::parse_polynomial;
pub use poly::{euler_vector, Polynomial};
pub use ring::Ring;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn multiply(f: &Polynomial, g: &Polynomial) -> crate::Result<Polynomial> {
    f.checked_mul(g)
}

pub fn partial_derivative(f: &Polynomial, index: usize) -> crate::Result<Polynomial> {
    f.partial_derivative(index)
}

pub fn exact_divide(g: &Polynomial, f: &Polynomial) -> crate::Result<Option<Polynomial>> {
    g.exact_divide(f)
}

pub fn determinant(m: &PolyMatrix) -> crate::Result<Polynomial> {
    m.determinant()
}
