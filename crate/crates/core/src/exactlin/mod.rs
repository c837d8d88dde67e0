//! Exact scalars and dense linear algebra over ℚ and 𝔽_p.

mod matrix;
mod scalar;

pub use matrix::{kernel_basis, rank, solve, Matrix};
pub use scalar::{Field, Scalar};

/// Plain coordinate vector.
pub type Vector = Vec<Scalar>;
