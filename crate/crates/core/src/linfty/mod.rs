//! Curved L∞ algebras controlling deformation maps and pairs `(Ω, r)`.

mod algebra;
mod controlling;
mod element;
mod pair;

pub use algebra::{
    apply, check_graded_symmetry, check_l_infinity_identities, jacobi_residual, mc_defect,
    symmetry_residuals, CurvedLInfty, LInftyReport, Provenance, Twisted,
};
pub use controlling::{
    controlling_algebra, governing_algebra, governing_l1, governing_l2, ControllingAlgebra,
};
pub use element::{lift_a, project_a, restrict_a, GradedElement};
pub use pair::{pair_algebra, pair_twist, PairAlgebra};

#[cfg(test)]
mod tests;
