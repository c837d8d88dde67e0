//! Exact computations for Leibniz algebras, proto-twilled structures,
//! deformation maps and their controlling curved L∞ algebras.
//!
//! Everything is computed over ℚ or a prime field 𝔽_p with exact arithmetic.

mod error;
pub mod exactlin;
pub mod leibniz;
pub mod linfty;
pub mod multimap;
pub mod prototwilled;
pub mod zoo;

pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, Scalar, Vector};
pub use multimap::{
    balavoine_bracket, Bidegree, BlockMap, MultiMap, Part, SplitSpace, Subspace, ARITY_CAP,
};
