//! Multilinear maps, the Balavoine bracket and the bigrading on a split space.

mod balavoine;
mod map;
mod split;

pub use balavoine::{
    balavoine_bracket, diamond, nested_bracket, permutation_sign, shuffles, Shuffle,
};
pub use map::{basis_vector, MultiIndex, MultiMap, ARITY_CAP};
pub use split::{
    bidegree_decompose, bidegree_of, has_bidegree, horizontal_lift, lift_sum, restrict, Bidegree,
    BlockMap, Part, SplitSpace, Subspace,
};
