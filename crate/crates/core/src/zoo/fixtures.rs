//! Small named structures shared by tests, benches, the acceptance suite and the CLI.
//! Every fixture is defined over an arbitrary field.

use super::build::{build, ExampleInputs, ExampleKind};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::leibniz::{LeibnizAlgebra, Representation};
use crate::multimap::{MultiMap, SplitSpace};
use crate::prototwilled::{transport, OmegaStructure};

/// `[e₁,e₁] = e₂`, a Leibniz algebra that is not Lie.
pub fn dim2_algebra(field: Field) -> LeibnizAlgebra {
    LeibnizAlgebra::from_constants(
        field,
        &[vec![vec![0, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]],
    )
    .expect("square constants")
}

/// `[e₁,e₂] = e₂`, a Leibniz algebra that is not Lie.
pub fn left_unit_algebra(field: Field) -> LeibnizAlgebra {
    LeibnizAlgebra::from_constants(
        field,
        &[vec![vec![0, 0], vec![0, 1]], vec![vec![0, 0], vec![0, 0]]],
    )
    .expect("square constants")
}

/// The non-abelian 2-dimensional Lie algebra `[e₁,e₂] = e₂ = −[e₂,e₁]`.
pub fn lie2_algebra(field: Field) -> LeibnizAlgebra {
    LeibnizAlgebra::from_constants(
        field,
        &[vec![vec![0, 0], vec![0, 1]], vec![vec![0, -1], vec![0, 0]]],
    )
    .expect("square constants")
}

fn bilinear(
    field: Field,
    inputs: [usize; 2],
    output: usize,
    entries: &[([usize; 2], usize, i64)],
) -> MultiMap {
    let mut m = MultiMap::zeros(field, &inputs, output).expect("arity 2");
    for (idx, j, c) in entries {
        m.set(idx, *j, field.from_i64(*c));
    }
    m
}

fn rep(
    field: Field,
    dims: [usize; 2],
    left: &[([usize; 2], usize, i64)],
    right: &[([usize; 2], usize, i64)],
) -> Representation {
    let [g, v] = dims;
    Representation::new(
        bilinear(field, [g, v], v, left),
        bilinear(field, [v, g], v, right),
    )
    .expect("shapes")
}

/// A fixture: a valid structure, how it was built, and named candidate maps `𝔥 → 𝔤`.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: Option<ExampleKind>,
    pub inputs: Option<ExampleInputs>,
    pub structure: OmegaStructure,
    pub maps: Vec<(String, MultiMap)>,
}

pub const FIXTURE_NAMES: [&str; 12] = [
    "dim2-dim1-semidirect",
    "dim2-dim1-theta-twisted",
    "dim2-dim1-weight1",
    "lie2-dim1-hemi",
    "dim1-dim2-derivation-host",
    "dim1-dim2-crossed-hom-host",
    "dim2-dim1-matched-pair",
    "general-eta",
    "dim2-dim2-direct",
    "dim2-modified",
    "dim2-reynolds",
    "dim2-r-matrix-host",
];

fn example_inputs(name: &str, field: Field) -> Option<(ExampleKind, ExampleInputs)> {
    let f = field;
    let nilpotent_l = [([0, 1], 0, 1)];
    let nilpotent_r = [([1, 0], 0, -1)];
    Some(match name {
        "dim2-dim1-semidirect" => (
            ExampleKind::Semidirect,
            ExampleInputs::new(dim2_algebra(f)).with_rep(Representation::zero(f, 2, 1)),
        ),
        "dim2-dim1-theta-twisted" => (
            ExampleKind::ThetaTwisted,
            ExampleInputs::new(dim2_algebra(f))
                .with_rep(Representation::zero(f, 2, 1))
                .with_cocycle(bilinear(f, [2, 2], 1, &[([0, 0], 0, 1)])),
        ),
        "dim2-dim1-weight1" => (
            ExampleKind::Weight1Semidirect,
            ExampleInputs::new(dim2_algebra(f))
                .with_second(LeibnizAlgebra::abelian(f, 1))
                .with_rep(rep(f, [2, 1], &[([0, 0], 0, 1)], &[])),
        ),
        "lie2-dim1-hemi" => (
            ExampleKind::HemiSemidirect,
            ExampleInputs::new(lie2_algebra(f)).with_rep(rep(f, [2, 1], &[([0, 0], 0, 1)], &[])),
        ),
        "dim1-dim2-derivation-host" => (
            ExampleKind::DerivationHost,
            ExampleInputs::new(LeibnizAlgebra::abelian(f, 1)).with_rep(rep(
                f,
                [1, 2],
                &nilpotent_l,
                &nilpotent_r,
            )),
        ),
        "dim1-dim2-crossed-hom-host" => (
            ExampleKind::CrossedHomHost,
            ExampleInputs::new(LeibnizAlgebra::abelian(f, 1))
                .with_second(LeibnizAlgebra::abelian(f, 2))
                .with_rep(rep(f, [1, 2], &nilpotent_l, &nilpotent_r)),
        ),
        "dim2-dim1-matched-pair" => (
            ExampleKind::MatchedPair,
            ExampleInputs::new(dim2_algebra(f))
                .with_second(LeibnizAlgebra::abelian(f, 1))
                .with_rep(Representation::zero(f, 2, 1))
                .with_dual_rep(rep(f, [1, 2], &[([0, 0], 1, 1)], &[([0, 0], 1, 1)])),
        ),
        "dim2-dim2-direct" => (
            ExampleKind::DirectProduct,
            ExampleInputs::new(dim2_algebra(f)).with_second(dim2_algebra(f)),
        ),
        "dim2-modified" => (ExampleKind::Modified, ExampleInputs::new(dim2_algebra(f))),
        "dim2-reynolds" => (ExampleKind::Reynolds, ExampleInputs::new(dim2_algebra(f))),
        "dim2-r-matrix-host" => (
            ExampleKind::RMatrixHost,
            ExampleInputs::new(dim2_algebra(f)),
        ),
        _ => return None,
    })
}

/// A 3-dimensional Leibniz algebra (`[e₃,e₁] = e₁`, `[e₃,e₂] = e₂`, `[e₃,e₃] = e₂`) split
/// along a unimodular change of basis so that all eight components except `bracket_g`
/// can be nonzero; in particular `η ≠ 0`.
pub fn general_eta(field: Field) -> OmegaStructure {
    let space = SplitSpace::new(field, 2, 1).expect("nonzero");
    let mut b = MultiMap::square_zeros(field, 3, 2).expect("arity 2");
    b.set(&[2, 0], 0, field.one());
    b.set(&[2, 1], 1, field.one());
    b.set(&[2, 2], 1, field.one());
    let base = OmegaStructure::from_omega(space, &b).expect("shapes");
    let a = Matrix::from_i64(field, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]]).expect("square");
    transport(&base, &a).expect("shapes").expect("unimodular")
}

fn candidate_maps(s: &OmegaStructure) -> Vec<(String, MultiMap)> {
    let (field, g, h) = (s.field(), s.space().dim_g(), s.space().dim_h());
    let zero = MultiMap::zeros(field, &[h], g).expect("arity 1");
    let first = MultiMap::from_fn(field, &[h], g, |idx, j| {
        if idx[0] == 0 && j == 0 {
            field.one()
        } else {
            field.zero()
        }
    })
    .expect("arity 1");
    let last = MultiMap::from_fn(field, &[h], g, |idx, j| {
        if idx[0] == h - 1 && j == g - 1 {
            field.one()
        } else {
            field.zero()
        }
    })
    .expect("arity 1");
    vec![
        ("r0".into(), zero),
        ("r-first".into(), first),
        ("r-last".into(), last),
    ]
}

/// The fixture called `name` over `field`.
pub fn fixture(name: &str, field: Field) -> Result<Fixture> {
    let static_name = FIXTURE_NAMES
        .iter()
        .copied()
        .find(|n| *n == name)
        .ok_or_else(|| Error::InvalidExampleInput(format!("unknown fixture {name:?}")))?;
    let (kind, inputs, structure) = match example_inputs(name, field) {
        Some((kind, inputs)) => {
            let s = build(kind, &inputs)?;
            (Some(kind), Some(inputs), s)
        }
        None => (None, None, general_eta(field)),
    };
    let maps = candidate_maps(&structure);
    Ok(Fixture {
        name: static_name,
        kind,
        inputs,
        structure,
        maps,
    })
}

pub fn all_fixtures(field: Field) -> Result<Vec<Fixture>> {
    FIXTURE_NAMES.iter().map(|n| fixture(n, field)).collect()
}
