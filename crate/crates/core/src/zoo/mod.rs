//! Worked examples: builders for each example family, the classical operators'
//! own defining identities, cross-checks against the deformation-map predicate and
//! exhaustive enumeration over finite fields.

mod build;
mod classify;
mod enumerate;
pub mod fixtures;

pub use build::{
    build, weight1_identities, ExampleInputs, ExampleKind, IdentityCheck, StructureClass,
};
pub use classify::{classify, equivalence_check, Disagreement, EquivalenceReport, RSet};
pub use enumerate::{
    all_linear_maps, candidate_count, enumerate_deformation_maps, linear_map_from_index,
    r_matrix_host, DEFAULT_BUDGET,
};

#[cfg(test)]
mod tests;
