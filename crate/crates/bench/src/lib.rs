//! Deterministic inputs for the engine benchmarks.

use deformap::zoo::fixtures::fixture;
use deformap::{Field, MultiMap};

/// A dense map on a `dim`-dimensional space with coefficients `(7t + 3) mod p`.
pub fn dense_square_map(field: Field, dim: usize, arity: usize) -> MultiMap {
    let len = dim.pow(arity as u32) * dim;
    let coeffs = (0..len).map(|t| field.from_i64(7 * t as i64 + 3)).collect();
    MultiMap::from_flat(field, &vec![dim; arity], dim, coeffs).expect("arity within cap")
}

/// A named zoo fixture over `𝔽_p`.
pub fn fixture_over(name: &str, p: u64) -> deformap::zoo::fixtures::Fixture {
    fixture(name, Field::Prime(p)).expect("known fixture")
}
