use super::*;
use crate::exactlin::{Field, Matrix};
use crate::multimap::{balavoine_bracket, basis_vector, MultiMap, SplitSpace, Subspace};
use crate::prototwilled::{
    deformation_coboundary, deformation_residual, is_deformation_map, transport, OmegaMaps,
    OmegaStructure,
};
use crate::Error;

fn f5() -> Field {
    Field::Prime(5)
}

fn dim2_dim1(field: Field) -> OmegaStructure {
    let space = SplitSpace::new(field, 2, 1).unwrap();
    let mut maps = OmegaMaps::zero(&space);
    maps.bracket_g.set(&[0, 0], 1, field.one());
    OmegaStructure::assemble(space, maps).unwrap()
}

/// A Leibniz (non-Lie) algebra on `𝒢` of dim 3 with `𝔤 = span(e₁,e₂)`, moved by an
/// automorphism so that `η`, `θ` and the actions are all nonzero.
fn general(field: Field) -> OmegaStructure {
    let space = SplitSpace::new(field, 2, 1).unwrap();
    let mut b = MultiMap::square_zeros(field, 3, 2).unwrap();
    // [e₃, e₁] = e₁, [e₃, e₂] = e₂, [e₃, e₃] = e₂: left multiplication by e₃ is a derivation
    b.set(&[2, 0], 0, field.one());
    b.set(&[2, 1], 1, field.one());
    b.set(&[2, 2], 1, field.one());
    let base = OmegaStructure::from_omega(space, &b).unwrap();
    let a = Matrix::from_i64(field, &[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1]]).unwrap();
    transport(&base, &a).unwrap().unwrap()
}

fn all_r(field: Field, s: &OmegaStructure) -> Vec<MultiMap> {
    let (g, h) = (s.space().dim_g(), s.space().dim_h());
    let p = field.characteristic() as usize;
    let count = p.pow((g * h) as u32);
    (0..count)
        .map(|mut t| {
            let mut coeffs = Vec::new();
            for _ in 0..g * h {
                coeffs.push(field.from_i64((t % p) as i64));
                t /= p;
            }
            let m = Matrix::from_columns(
                field,
                g,
                &coeffs.chunks(g).map(<[_]>::to_vec).collect::<Vec<_>>(),
            )
            .unwrap();
            MultiMap::from_matrix(&m)
        })
        .collect()
}

#[test]
fn general_fixture_is_valid_and_generic() {
    let s = general(f5());
    assert!(crate::prototwilled::check_proto_twilled(&s).unwrap().holds);
    assert!(!s.maps().eta.is_zero() && !s.maps().theta.is_zero());
}

#[test]
fn mc_defect_matches_deformation_maps() {
    for s in [dim2_dim1(f5()), general(f5())] {
        let c = controlling_algebra(&s).unwrap();
        for r in all_r(f5(), &s) {
            let defect = mc_defect(&c, &c.element(&r).unwrap()).unwrap();
            let is_def = is_deformation_map(&s, &r).unwrap().is_deformation_map;
            assert_eq!(defect.is_zero(), is_def);
            let residual = lift_a(s.space(), &deformation_residual(&s, &r).unwrap()).unwrap();
            assert_eq!(defect.base_part(), Some(&residual));
        }
    }
}

#[test]
fn defect_examples() {
    let s = dim2_dim1(f5());
    let c = controlling_algebra(&s).unwrap();
    let zero = GradedElement::zero(0);
    assert_eq!(mc_defect(&c, &zero).unwrap(), c.curvature().unwrap());
    let r = MultiMap::from_fn(f5(), &[1], 2, |_, j| f5().from_i64([1, 0][j])).unwrap();
    let d = mc_defect(&c, &c.element(&r).unwrap()).unwrap();
    let block = restrict_a(s.space(), d.base_part().unwrap()).unwrap();
    assert_eq!(block.row(&[0, 0]), basis_vector(f5(), 2, 1).as_slice());
    assert!(matches!(
        mc_defect(
            &controlling_algebra(&dim2_dim1(Field::Prime(3))).unwrap(),
            &zero
        ),
        Err(Error::CharacteristicTooSmall { .. })
    ));
}

#[test]
fn controlling_rejects_invalid_omega() {
    let s = general(Field::Rational);
    let mut maps = s.maps().clone();
    maps.eta.set(&[0, 0], 0, Field::Rational.from_i64(9));
    let bad = OmegaStructure::assemble(*s.space(), maps).unwrap();
    assert!(matches!(
        controlling_algebra(&bad),
        Err(Error::InvalidOmega)
    ));
}

fn samples(field: Field, s: &OmegaStructure) -> Vec<GradedElement> {
    let sp = s.space();
    let (g, h) = (sp.dim_g(), sp.dim_h());
    let mut t = 2;
    let mut next = || {
        t = (t * 3 + 1) % 7;
        field.from_i64(t - 3)
    };
    let f1 = MultiMap::from_fn(field, &[h], g, |_, _| next()).unwrap();
    let f2 = MultiMap::from_fn(field, &[h, h], g, |_, _| next()).unwrap();
    vec![
        GradedElement::base(lift_a(sp, &f1).unwrap()),
        GradedElement::base(lift_a(sp, &f2).unwrap()),
    ]
}

#[test]
fn controlling_identities_and_bidegrees() {
    for s in [dim2_dim1(f5()), general(f5())] {
        let c = controlling_algebra(&s).unwrap();
        let xs = samples(f5(), &s);
        assert!(check_l_infinity_identities(&c, &xs, 3).unwrap().holds);
        assert!(check_graded_symmetry(&c, &xs, 3).unwrap().holds);
        for k in 1..=3 {
            let args: Vec<&GradedElement> = (0..k).map(|i| &xs[i % 2]).collect();
            let out = c.bracket(&args).unwrap();
            if let Some(m) = out.base_part() {
                assert!(Subspace::A.contains(s.space(), m).unwrap());
            }
        }
    }
}

#[test]
fn semidirect_has_only_l2() {
    let s = dim2_dim1(Field::Rational);
    let c = controlling_algebra(&s).unwrap();
    let xs = samples(Field::Rational, &s);
    assert!(c.curvature().unwrap().is_zero());
    assert!(c.bracket(&[&xs[0]]).unwrap().is_zero());
    assert!(c.bracket(&[&xs[0], &xs[0], &xs[0]]).unwrap().is_zero());
    assert!(!c.bracket(&[&xs[0], &xs[0]]).unwrap().is_zero());
}

fn deformation_maps(s: &OmegaStructure) -> Vec<MultiMap> {
    all_r(s.field(), s)
        .into_iter()
        .filter(|r| is_deformation_map(s, r).unwrap().is_deformation_map)
        .collect()
}

#[test]
fn governing_closed_forms_and_differential() {
    let s = general(f5());
    let maps = deformation_maps(&s);
    assert!(!maps.is_empty());
    let sp = *s.space();
    for r in maps.iter().take(3) {
        let gov = governing_algebra(&s, r).unwrap();
        assert!(gov.curvature().unwrap().is_zero());
        for n in 1..=3 {
            let f = MultiMap::from_fn(f5(), &vec![1; n], 2, |idx, j| {
                f5().from_i64((idx.iter().sum::<usize>() + 2 * j + n) as i64)
            })
            .unwrap();
            let ft = lift_a(&sp, &f).unwrap();
            let generic = gov.bracket(&[&GradedElement::base(ft.clone())]).unwrap();
            let closed = governing_l1(&s, r, &ft).unwrap();
            assert_eq!(generic.base_part(), Some(&closed));
            let delta = deformation_coboundary(&s, r, &f).unwrap();
            let sign = if (n - 1) % 2 == 0 {
                f5().one()
            } else {
                -f5().one()
            };
            assert_eq!(restrict_a(&sp, &closed).unwrap(), delta.scale(&sign));
        }
        let xs = samples(f5(), &s);
        let generic = gov.bracket(&[&xs[0], &xs[1]]).unwrap();
        let closed = governing_l2(
            &s,
            r,
            xs[0].base_part().unwrap(),
            xs[1].base_part().unwrap(),
        )
        .unwrap();
        assert_eq!(generic.base_part(), Some(&closed));
        assert!(check_l_infinity_identities(&gov, &xs, 3).unwrap().holds);
    }
}

#[test]
fn governing_mc_elements_are_perturbations() {
    for s in [dim2_dim1(f5()), general(f5())] {
        for r in deformation_maps(&s).into_iter().take(2) {
            let gov = governing_algebra(&s, &r).unwrap();
            for rp in all_r(f5(), &s) {
                let el = GradedElement::base(lift_a(s.space(), &rp).unwrap());
                let in_twist = mc_defect(&gov, &el).unwrap().is_zero();
                let sum = r.add(&rp).unwrap();
                assert_eq!(
                    in_twist,
                    is_deformation_map(&s, &sum).unwrap().is_deformation_map
                );
            }
        }
    }
}

#[test]
fn twisting_needs_mc_element() {
    let s = dim2_dim1(f5());
    let r = MultiMap::from_fn(f5(), &[1], 2, |_, j| f5().from_i64([1, 0][j])).unwrap();
    assert!(matches!(
        governing_algebra(&s, &r),
        Err(Error::NotMaurerCartan)
    ));
}

#[test]
fn pair_defect_decomposes() {
    let q = f5();
    for s in [dim2_dim1(q), general(q)] {
        let l = pair_algebra(*s.space(), Subspace::Full, 4).unwrap();
        let c = controlling_algebra(&s).unwrap();
        for r in all_r(q, &s).into_iter().step_by(3) {
            let alpha = l.element(s.omega(), &r).unwrap();
            let d = mc_defect(&l, &alpha).unwrap();
            let square = balavoine_bracket(s.omega(), s.omega()).unwrap();
            assert_eq!(
                d.shifted_part()
                    .cloned()
                    .unwrap_or_else(|| square.scale(&q.zero())),
                square.scale(&-q.ratio(1, 2).unwrap())
            );
            let cd = mc_defect(&c, &c.element(&r).unwrap()).unwrap();
            assert_eq!(
                d.base_part().filter(|m| !m.is_zero()),
                cd.base_part().filter(|m| !m.is_zero())
            );
            assert_eq!(
                d.is_zero(),
                is_deformation_map(&s, &r).unwrap().is_deformation_map
            );
        }
    }
}

#[test]
fn pair_detects_invalid_structures() {
    let q = f5();
    let s = general(q);
    let mut maps = s.maps().clone();
    maps.psi_l.set(&[0, 0], 0, q.from_i64(3));
    let bad = OmegaStructure::assemble(*s.space(), maps).unwrap();
    let l = pair_algebra(*s.space(), Subspace::Full, 4).unwrap();
    for r in all_r(q, &s) {
        let d = mc_defect(&l, &l.element(bad.omega(), &r).unwrap()).unwrap();
        assert!(d.shifted_part().is_some_and(|m| !m.is_zero()));
    }
}

#[test]
fn pair_subalgebra_is_enforced() {
    let s = general(f5());
    let l = pair_algebra(*s.space(), Subspace::BPrime, 4).unwrap();
    let r = MultiMap::zeros(f5(), &[1], 2).unwrap();
    assert!(matches!(
        mc_defect(&l, &l.element(s.omega(), &r).unwrap()),
        Err(Error::OutsideSubalgebra(_))
    ));
    assert!(matches!(
        pair_algebra(*s.space(), Subspace::A, 4),
        Err(Error::OutsideSubalgebra(_))
    ));
    assert!(matches!(
        pair_algebra(*s.space(), Subspace::Full, 3),
        Err(Error::Degree(_))
    ));
}

#[test]
fn pair_identities_hold() {
    let q = f5();
    let s = general(q);
    let l = pair_algebra(*s.space(), Subspace::Full, 4).unwrap();
    let mut xs = samples(q, &s);
    xs.push(GradedElement::shifted(s.mu().clone()));
    xs.push(GradedElement::shifted(MultiMap::identity(q, 3)));
    assert!(check_graded_symmetry(&l, &xs, 3).unwrap().holds);
    let report = check_l_infinity_identities(&l, &xs, 3).unwrap();
    assert!(report.holds, "{:?}", report.failures);
}

#[test]
fn pair_twist_perturbations() {
    let q = f5();
    let s = dim2_dim1(q);
    let l = pair_algebra(*s.space(), Subspace::Full, 4).unwrap();
    let r = MultiMap::zeros(q, &[1], 2).unwrap();
    let alpha = l.element(s.omega(), &r).unwrap();
    let tw = pair_twist(l.clone(), alpha).unwrap();
    assert!(mc_defect(&tw, &GradedElement::zero(0)).unwrap().is_zero());
    let zero_omega = MultiMap::square_zeros(q, 3, 2).unwrap();
    for rp in all_r(q, &s) {
        let el = l.element(&zero_omega, &rp).unwrap();
        let sum = r.add(&rp).unwrap();
        assert_eq!(
            mc_defect(&tw, &el).unwrap().is_zero(),
            is_deformation_map(&s, &sum).unwrap().is_deformation_map
        );
    }
    let mut bump = zero_omega.clone();
    bump.set(&[1, 0], 0, q.one());
    let el = l.element(&bump, &r).unwrap();
    let d = mc_defect(&tw, &el).unwrap();
    assert!(d.shifted_part().is_some_and(|m| !m.is_zero()));
}
