//! Gröbner bases of ideals and graded submodules, syzygies, minimal
//! presentations and minimal free resolutions.

mod basis;
mod engine;
mod ideal;
mod minimal;
mod order;
mod resolution;
mod syzygy;
mod vector;

pub use basis::{
    groebner_basis, module_groebner_basis, module_normal_form, normal_form, pot_order, top_order,
    GroebnerBasis,
};
pub use ideal::{colon, colon_max, ideal_intersection, Ideal};
pub use minimal::{
    minimal_generating_set, minimal_generator_indices, minimal_generators, minimal_ideal_generators,
    minimalize,
    Presentation,
};
pub use order::{ModuleOrder, ModuleOrderKind};
pub use resolution::{minimal_free_resolution, resolve_ideal, Resolution};
pub use syzygy::{polynomial_syzygies, syzygies};

#[cfg(test)]
mod tests;
