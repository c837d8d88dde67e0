//! Leibniz algebras, their representations and Loday–Pirashvili cohomology.

mod algebra;
mod cohomology;

pub use algebra::{
    adjoint_rep, check_leibniz, check_representation, coadjoint_rep, leibniz_residual,
    IdentityReport, LeibnizAlgebra, LeibnizReport, Representation, RepresentationReport, Violation,
};
pub use cohomology::{
    coboundary_matrix, coboundary_matrix_with, cohomology_dimensions, cohomology_dimensions_with,
    lp_coboundary, CohomologyDims,
};
