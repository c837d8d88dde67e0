//! Proto-twilled Leibniz algebras `𝒢 = 𝔤 ⊕ 𝔥`, deformation maps `𝔥 → 𝔤`,
//! the structures they induce, and twisting.

mod deformation;
mod structure;
mod twist;

pub use deformation::{
    deformation_coboundary, deformation_cohomology, deformation_residual, graph_closed,
    induced_actions, induced_bracket, induced_bracket_map, induced_representation,
    is_deformation_map, DeformationReport,
};
pub use structure::{
    check_proto_twilled, EquationCheck, OmegaMaps, OmegaStructure, ProtoTwilledReport, COMPONENTS,
};
pub use twist::{block_formula_maps, shear, transport, twist_omega, TwistedOmega};
