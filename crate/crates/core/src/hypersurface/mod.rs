//! Jacobian syzygies of a hypersurface, plus-one generation, Bourbaki
//! ideals and tameness.

mod arrangement;
mod bourbaki;
mod checks;
mod pog;
mod report;
mod serial;
mod syzygies;
mod tjurina;

pub use arrangement::linear_factors;
pub use bourbaki::{
    bourbaki, is_tame, minors_ideal, subset_verdict, tame_scan, BourbakiMap, BourbakiResult,
    SubsetVerdict, TameScan,
};
pub use checks::{verify_identities, CheckStatus, IdentityCheck};
pub use pog::{classify, pog_structure, relation_module, Classification, PogStructure};
pub use report::{
    analyze, groebner_dimension, AnalysisOptions, ArrangementCheck, HypersurfaceReport, OracleSummary, SigmaSummary,
    TjurinaSummary,
};
pub use syzygies::{jacobian_syzygies, jacobian_syzygies_with, SyzygySet};
pub use tjurina::{classify_by_tjurina, tjurina_bound, TjurinaClass};

#[cfg(test)]
mod tests;
