//! Jacobian syzygies of projective hypersurfaces over ℚ.
//!
//! The crate computes the module `D₀(f)` of derivations killing a reduced
//! homogeneous polynomial `f`, its minimal generators and resolution, the
//! singular-subscheme invariants read off the Hilbert polynomial of the
//! Jacobian algebra, and the Bourbaki ideals `B(f, ρ̂)` used to decide
//! tameness. An independent degree-by-degree linear-algebra oracle
//! cross-checks the Gröbner machinery.

pub mod error;
pub mod groebner;
pub mod hypersurface;
pub mod invariants;
mod linalg;
pub mod oracle;
pub mod polyring;

pub use error::{Error, Result};
pub use polyring::{
    euler_vector, parse_polynomial, ModuleVector, Monomial, MonomialOrder, PolyMatrix, Polynomial,
    Rational, Ring,
};
pub use hypersurface::{
    analyze, AnalysisOptions, BourbakiResult, CheckStatus, Classification, HypersurfaceReport,
    IdentityCheck, SyzygySet,
};
