use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fixtures::*;
use super::*;
use crate::exactlin::{Field, Matrix};
use crate::leibniz::{check_leibniz, lp_coboundary, LeibnizAlgebra, Representation};
use crate::linfty::{apply, controlling_algebra, mc_defect, pair_algebra, CurvedLInfty};
use crate::multimap::{MultiMap, Subspace};
use crate::prototwilled::{
    check_proto_twilled, deformation_coboundary, is_deformation_map, transport, OmegaStructure,
};
use crate::Error;

const FIELDS: [Field; 4] = [
    Field::Prime(2),
    Field::Prime(3),
    Field::Prime(5),
    Field::Rational,
];

#[test]
fn every_fixture_is_valid_with_its_class() {
    for field in FIELDS {
        for fx in all_fixtures(field).unwrap() {
            let report = check_proto_twilled(&fx.structure).unwrap();
            assert!(
                report.holds && report.equations_hold,
                "{} over {field}",
                fx.name
            );
            if let Some(kind) = fx.kind {
                assert!(
                    StructureClass::of(&fx.structure) >= kind.expected_class(),
                    "{}",
                    fx.name
                );
            }
        }
    }
    let g = general_eta(Field::Rational);
    assert!(!g.maps().eta.is_zero() && !g.maps().theta.is_zero() && !g.maps().psi_l.is_zero());
    assert_eq!(StructureClass::of(&g), StructureClass::Proto);
}

#[test]
fn build_examples() {
    let q = Field::Rational;
    let direct = build(
        ExampleKind::DirectProduct,
        &ExampleInputs::new(dim2_algebra(q)).with_second(dim2_algebra(q)),
    )
    .unwrap();
    assert!(direct.maps().eta.is_zero() && direct.maps().theta.is_zero() && direct.is_twilled());

    let rey = build(ExampleKind::Reynolds, &ExampleInputs::new(dim2_algebra(q))).unwrap();
    assert_eq!(rey.maps().theta, dim2_algebra(q).bracket().neg());
    assert!(rey.is_quasi_twilled() && !rey.is_twilled());

    let hemi = build(
        ExampleKind::HemiSemidirect,
        &ExampleInputs::new(LeibnizAlgebra::abelian(q, 2)).with_rep(Representation::zero(q, 2, 2)),
    )
    .unwrap();
    assert!(hemi.omega().is_zero());

    let modified = build(ExampleKind::Modified, &ExampleInputs::new(dim2_algebra(q))).unwrap();
    assert_eq!(modified.maps().eta, *dim2_algebra(q).bracket());
}

fn invalid_message(r: crate::Result<OmegaStructure>) -> String {
    match r {
        Err(Error::InvalidExampleInput(m)) => m,
        other => panic!("expected InvalidExampleInput, got {other:?}"),
    }
}

#[test]
fn build_names_the_violated_identity() {
    let q = Field::Rational;
    let mut d = MultiMap::zeros(q, &[1, 2], 2).unwrap();
    d.set(&[0, 0], 0, q.one());
    d.set(&[0, 1], 1, q.from_i64(2));
    let rep = Representation::new(d, MultiMap::zeros(q, &[2, 1], 2).unwrap()).unwrap();
    let inputs = ExampleInputs::new(LeibnizAlgebra::abelian(q, 1))
        .with_second(dim2_algebra(q))
        .with_rep(rep);
    let m = invalid_message(build(ExampleKind::Weight1Semidirect, &inputs));
    assert!(m.contains("[u,ρL(x,v)]"), "{m}");

    let not_cocycle =
        MultiMap::from_fn(q, &[2, 2], 1, |idx, _| q.from_i64((idx[0] == 1) as i64)).unwrap();
    let inputs = ExampleInputs::new(left_unit_algebra(q))
        .with_rep(Representation::zero(q, 2, 1))
        .with_cocycle(not_cocycle);
    assert!(invalid_message(build(ExampleKind::ThetaTwisted, &inputs)).contains("2-cocycle"));

    let inputs = ExampleInputs::new(dim2_algebra(q)).with_rep(Representation::zero(q, 2, 1));
    assert!(invalid_message(build(ExampleKind::HemiSemidirect, &inputs)).contains("antisymmetry"));
    assert!(invalid_message(build(
        ExampleKind::Semidirect,
        &ExampleInputs::new(dim2_algebra(q))
    ))
    .contains("representation"));

    // [e,e] = e is not a Leibniz bracket: [e,[e,e]] = e but [[e,e],e] + [e,[e,e]] = 2e.
    let loopy = LeibnizAlgebra::from_constants(Field::Prime(5), &[vec![vec![1]]]).unwrap();
    assert!(
        invalid_message(build(ExampleKind::Modified, &ExampleInputs::new(loopy)))
            .contains("Leibniz identity")
    );

    let bad_rep = Representation::new(
        MultiMap::from_fn(q, &[2, 1], 1, |idx, _| q.from_i64((idx[0] == 1) as i64)).unwrap(),
        MultiMap::zeros(q, &[1, 2], 1).unwrap(),
    )
    .unwrap();
    let inputs = ExampleInputs::new(dim2_algebra(q)).with_rep(bad_rep);
    assert!(invalid_message(build(ExampleKind::Semidirect, &inputs))
        .contains("representation identity"));
}

#[test]
fn classify_examples() {
    let q = Field::Rational;
    let a = dim2_algebra(q);
    let id = MultiMap::identity(q, 2);
    let zero = MultiMap::zeros(q, &[2], 2).unwrap();
    let direct = ExampleInputs::new(a.clone()).with_second(a.clone());
    assert!(classify(ExampleKind::DirectProduct, &id, &direct).unwrap());
    assert!(!classify(ExampleKind::Modified, &zero, &ExampleInputs::new(a.clone())).unwrap());
    assert!(classify(
        ExampleKind::Modified,
        &zero,
        &ExampleInputs::new(LeibnizAlgebra::abelian(q, 2))
    )
    .unwrap());
    assert!(classify(ExampleKind::Reynolds, &zero, &ExampleInputs::new(a.clone())).unwrap());
    let wrong = MultiMap::zeros(q, &[1], 2).unwrap();
    assert!(matches!(
        classify(ExampleKind::Reynolds, &wrong, &ExampleInputs::new(a)),
        Err(Error::Shape(_))
    ));
}

#[test]
fn exhaustive_equivalences_over_small_fields() {
    for field in [Field::Prime(2), Field::Prime(3)] {
        for fx in all_fixtures(field).unwrap() {
            let (Some(kind), Some(inputs)) = (fx.kind, fx.inputs.as_ref()) else {
                continue;
            };
            let report = equivalence_check(
                kind,
                inputs,
                &RSet::Exhaustive {
                    budget: DEFAULT_BUDGET,
                },
            )
            .unwrap();
            assert!(
                report.holds,
                "{} over {field}: {:?}",
                fx.name, report.disagreements
            );
            let dims = fx.structure.space();
            assert_eq!(
                report.tested as u128,
                candidate_count(field, dims.dim_h(), dims.dim_g()).unwrap()
            );
        }
    }
}

#[test]
fn listed_equivalence_counts() {
    let f2 = Field::Prime(2);
    let semi = fixture("dim2-dim1-semidirect", f2).unwrap();
    let report = equivalence_check(
        ExampleKind::Semidirect,
        semi.inputs.as_ref().unwrap(),
        &RSet::Exhaustive { budget: 100 },
    )
    .unwrap();
    assert_eq!(
        (report.tested, report.disagreements.len(), report.positives),
        (4, 0, 2)
    );

    let ab = LeibnizAlgebra::abelian(f2, 2);
    let mut rho = MultiMap::zeros(f2, &[2, 2], 2).unwrap();
    for x in 0..2 {
        for v in 0..2 {
            rho.set(&[x, v], v, f2.one());
        }
    }
    let inputs = ExampleInputs::new(ab)
        .with_rep(Representation::new(rho, MultiMap::zeros(f2, &[2, 2], 2).unwrap()).unwrap());
    let report = equivalence_check(
        ExampleKind::HemiSemidirect,
        &inputs,
        &RSet::Exhaustive { budget: 100 },
    )
    .unwrap();
    assert!(report.holds);
    assert_eq!(report.tested, 16);

    let big = equivalence_check(
        ExampleKind::Semidirect,
        semi.inputs.as_ref().unwrap(),
        &RSet::Exhaustive { budget: 3 },
    );
    assert!(matches!(
        big,
        Err(Error::BudgetExceeded {
            needed: 4,
            budget: 3
        })
    ));
}

fn random_map(rng: &mut ChaCha8Rng, field: Field, dom: usize, cod: usize) -> MultiMap {
    MultiMap::from_fn(field, &[dom], cod, |_, _| {
        if rng.gen_bool(0.4) {
            field.zero()
        } else {
            field.from_i64(rng.gen_range(-2..=2))
        }
    })
    .unwrap()
}

#[test]
fn sampled_equivalences_over_rationals() {
    let q = Field::Rational;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for fx in all_fixtures(q).unwrap() {
        let (Some(kind), Some(inputs)) = (fx.kind, fx.inputs.as_ref()) else {
            continue;
        };
        let sp = fx.structure.space();
        let mut set: Vec<MultiMap> = (0..40)
            .map(|_| random_map(&mut rng, q, sp.dim_h(), sp.dim_g()))
            .collect();
        set.extend(fx.maps.iter().map(|(_, m)| m.clone()));
        let report = equivalence_check(kind, inputs, &RSet::Given(set)).unwrap();
        assert!(report.holds, "{}: {:?}", fx.name, report.disagreements);
    }
}

#[test]
fn enumeration_examples() {
    let f2 = Field::Prime(2);
    let zero = OmegaStructure::zero(crate::multimap::SplitSpace::new(f2, 2, 2).unwrap());
    assert_eq!(
        enumerate_deformation_maps(&zero, DEFAULT_BUDGET)
            .unwrap()
            .len(),
        16
    );

    let semi = fixture("dim2-dim1-semidirect", f2).unwrap().structure;
    let found = enumerate_deformation_maps(&semi, DEFAULT_BUDGET).unwrap();
    assert_eq!(found.len(), 2);
    assert!(found.iter().all(|r| r.get(&[0], 0).is_zero()));

    for field in [Field::Prime(3), Field::Prime(5)] {
        let g = general_eta(field);
        let found = enumerate_deformation_maps(&g, DEFAULT_BUDGET).unwrap();
        assert!(found.iter().all(|r| !r.is_zero()));
    }

    assert!(matches!(
        enumerate_deformation_maps(&general_eta(Field::Rational), DEFAULT_BUDGET),
        Err(Error::FieldMismatch(_))
    ));
    assert!(matches!(
        enumerate_deformation_maps(&semi, 1),
        Err(Error::BudgetExceeded {
            needed: 4,
            budget: 1
        })
    ));
}

#[test]
fn enumeration_order_is_index_order() {
    let f3 = Field::Prime(3);
    let s = fixture("dim2-modified", f3).unwrap().structure;
    let found = enumerate_deformation_maps(&s, DEFAULT_BUDGET).unwrap();
    let sequential: Vec<MultiMap> = all_linear_maps(f3, 2, 2, DEFAULT_BUDGET)
        .unwrap()
        .into_iter()
        .filter(|r| is_deformation_map(&s, r).unwrap().is_deformation_map)
        .collect();
    assert_eq!(found, sequential);
    let r = linear_map_from_index(f3, 2, 2, 1 + 3 * 2);
    assert_eq!(r.row(&[0]), &[f3.one(), f3.from_i64(2)]);
    assert!(r.row(&[1]).iter().all(|c| c.is_zero()));
}

/// Relabelling the basis of `𝔥` by a permutation matrix `P` maps deformation maps
/// `r` to `r∘P` bijectively.
#[test]
fn enumeration_is_relabelling_invariant() {
    let f3 = Field::Prime(3);
    for name in [
        "dim2-dim2-direct",
        "dim2-reynolds",
        "dim1-dim2-crossed-hom-host",
    ] {
        let s = fixture(name, f3).unwrap().structure;
        let (g, h) = (s.space().dim_g(), s.space().dim_h());
        let mut a = Matrix::zeros(f3, g + h, g + h);
        for i in 0..g {
            a.set(i, i, f3.one());
        }
        for j in 0..h {
            a.set(g + (j + 1) % h, g + j, f3.one());
        }
        let relabelled = transport(&s, &a).unwrap().unwrap();
        let before = enumerate_deformation_maps(&s, DEFAULT_BUDGET).unwrap();
        let after = enumerate_deformation_maps(&relabelled, DEFAULT_BUDGET).unwrap();
        assert_eq!(before.len(), after.len(), "{name}");
        let perm = MultiMap::from_fn(f3, &[h], h, |idx, i| {
            f3.from_i64((i == (idx[0] + 1) % h) as i64)
        })
        .unwrap();
        for r in &before {
            let moved = perm.then(r).unwrap();
            assert!(after.contains(&moved), "{name}");
        }
    }
}

/// `[s♯α, s♯β] = s♯(coad^L(s♯α, β) + coad^R(α, s♯β))` expanded in coordinates, with
/// `coad^L(x,α)(y) = −α([x,y])` and `coad^R(α,x)(y) = α([x,y] + [y,x])`.
fn r_matrix_by_coordinates(c: &[Vec<Vec<i64>>], s: &[Vec<i64>], p: i64) -> bool {
    let n = c.len();
    let sharp = |a: usize| -> Vec<i64> { s[a].clone() };
    let bracket = |x: &[i64], y: &[i64]| -> Vec<i64> {
        let mut out = vec![0; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[k] += x[i] * y[j] * c[i][j][k];
                }
            }
        }
        out
    };
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (sharp(a), sharp(b));
            let lhs = bracket(&x, &y);
            let mut dual = vec![0; n];
            for (yi, slot) in dual.iter_mut().enumerate() {
                let e = |i: usize| -> Vec<i64> { (0..n).map(|t| (t == i) as i64).collect() };
                let left = -bracket(&x, &e(yi))[b];
                let right = bracket(&y, &e(yi))[a] + bracket(&e(yi), &y)[a];
                *slot = left + right;
            }
            let rhs: Vec<i64> = (0..n)
                .map(|k| (0..n).map(|t| dual[t] * s[t][k]).sum())
                .collect();
            if lhs
                .iter()
                .zip(&rhs)
                .any(|(l, r)| (l - r).rem_euclid(p) != 0)
            {
                return false;
            }
        }
    }
    true
}

#[test]
fn r_matrix_examples() {
    let f5 = Field::Prime(5);
    let a = dim2_algebra(f5);
    let consts = vec![vec![vec![0, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]];
    let zero = Matrix::zeros(f5, 2, 2);
    let (host, r) = r_matrix_host(&a, &zero).unwrap();
    assert!(r.is_zero() && is_deformation_map(&host, &r).unwrap().is_deformation_map);
    for entries in [
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [1, 1, 1, 0],
        [0, 2, 2, 3],
        [4, 1, 1, 1],
    ] {
        let rows = [vec![entries[0], entries[1]], vec![entries[2], entries[3]]];
        let s = Matrix::from_i64(f5, &[&rows[0], &rows[1]]).unwrap();
        let (host, r) = r_matrix_host(&a, &s).unwrap();
        let verdict = is_deformation_map(&host, &r).unwrap().is_deformation_map;
        assert_eq!(
            verdict,
            r_matrix_by_coordinates(&consts, &rows, 5),
            "{entries:?}"
        );
        assert_eq!(
            verdict,
            classify(ExampleKind::RMatrixHost, &r, &ExampleInputs::new(a.clone())).unwrap()
        );
    }
    let asym = Matrix::from_i64(f5, &[&[0, 1], &[0, 0]]).unwrap();
    assert!(matches!(r_matrix_host(&a, &asym), Err(Error::NotSymmetric)));
    let ab = LeibnizAlgebra::abelian(f5, 2);
    let s = Matrix::from_i64(f5, &[&[1, 2], &[2, 3]]).unwrap();
    let (host, r) = r_matrix_host(&ab, &s).unwrap();
    assert!(is_deformation_map(&host, &r).unwrap().is_deformation_map);
}

#[test]
fn pair_specializations_reproduce_operators() {
    let f5 = Field::Prime(5);
    for (name, sub) in [
        ("dim2-dim1-semidirect", Subspace::BPrime),
        ("dim2-dim1-theta-twisted", Subspace::BDoublePrime),
        ("dim2-dim1-matched-pair", Subspace::M),
    ] {
        let fx = fixture(name, f5).unwrap();
        let (kind, inputs) = (fx.kind.unwrap(), fx.inputs.as_ref().unwrap());
        let l = pair_algebra(*fx.structure.space(), sub, 4).unwrap();
        assert!(sub
            .contains(fx.structure.space(), fx.structure.omega())
            .unwrap());
        for r in all_linear_maps(f5, 1, 2, DEFAULT_BUDGET).unwrap() {
            let alpha = l.element(fx.structure.omega(), &r).unwrap();
            let mc = mc_defect(&l, &alpha).unwrap().is_zero();
            assert_eq!(mc, classify(kind, &r, inputs).unwrap(), "{name}");
        }
    }
    let fx = fixture("dim2-dim1-theta-twisted", f5).unwrap();
    let l = pair_algebra(*fx.structure.space(), Subspace::BPrime, 4).unwrap();
    let r = MultiMap::zeros(f5, &[1], 2).unwrap();
    assert!(matches!(
        mc_defect(&l, &l.element(fx.structure.omega(), &r).unwrap()),
        Err(Error::OutsideSubalgebra(_))
    ));
}

#[test]
fn coboundaries_square_to_zero_on_the_zoo() {
    let f5 = Field::Prime(5);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for fx in all_fixtures(f5).unwrap() {
        if let Some(inputs) = &fx.inputs {
            if let Some(rep) = &inputs.rep {
                let (g, v) = (inputs.algebra.dim(), rep.dim_v());
                for n in 0..=2 {
                    let f = MultiMap::from_fn(f5, &vec![g; n], v, |_, _| {
                        f5.from_i64(rng.gen_range(0..5))
                    })
                    .unwrap();
                    let dd = lp_coboundary(
                        &lp_coboundary(&f, &inputs.algebra, rep).unwrap(),
                        &inputs.algebra,
                        rep,
                    )
                    .unwrap();
                    assert!(dd.is_zero(), "{}", fx.name);
                }
            }
        }
        let s = &fx.structure;
        let (g, h) = (s.space().dim_g(), s.space().dim_h());
        for r in enumerate_deformation_maps(s, DEFAULT_BUDGET)
            .unwrap()
            .into_iter()
            .take(3)
        {
            for n in 0..=2 {
                let f =
                    MultiMap::from_fn(f5, &vec![h; n], g, |_, _| f5.from_i64(rng.gen_range(0..5)))
                        .unwrap();
                let d = deformation_coboundary(s, &r, &f).unwrap();
                assert!(
                    deformation_coboundary(s, &r, &d).unwrap().is_zero(),
                    "{}",
                    fx.name
                );
            }
        }
    }
}

#[test]
fn controlling_curvature_is_closed_on_the_zoo() {
    for fx in all_fixtures(Field::Prime(5)).unwrap() {
        let c = controlling_algebra(&fx.structure).unwrap();
        let l0 = c.curvature().unwrap();
        assert!(apply(&c, &[&l0]).unwrap().is_zero(), "{}", fx.name);
    }
}

#[test]
fn fixture_lookup() {
    assert!(matches!(
        fixture("nope", Field::Rational),
        Err(Error::InvalidExampleInput(_))
    ));
    for kind in ExampleKind::ALL {
        assert_eq!(ExampleKind::from_name(kind.name()), Some(kind));
    }
    assert!(
        check_leibniz(lie2_algebra(Field::Prime(3)).bracket())
            .unwrap()
            .holds
    );
}
