//! End-to-end runs of the public API on every zoo fixture: the predicates that
//! characterize deformation maps must agree, and twisting by one must kill `η_r`.

use deformap::linfty::{mc_defect, ControllingAlgebra, Twisted};
use deformap::prototwilled::{
    check_proto_twilled, deformation_cohomology, is_deformation_map, twist_omega,
};
use deformap::zoo::fixtures::{all_fixtures, FIXTURE_NAMES};
use deformap::zoo::{all_linear_maps, enumerate_deformation_maps};
use deformap::{Error, Field};

const F5: Field = Field::Prime(5);
const BUDGET: u128 = 1 << 16;

#[test]
fn every_fixture_is_proto_twilled() {
    let fixtures = all_fixtures(F5).unwrap();
    assert_eq!(fixtures.len(), FIXTURE_NAMES.len());
    for fx in &fixtures {
        assert!(
            check_proto_twilled(&fx.structure).unwrap().holds,
            "{}",
            fx.name
        );
    }
}

#[test]
fn residual_graph_and_mc_agree_on_all_small_maps() {
    for fx in all_fixtures(F5).unwrap() {
        let s = &fx.structure;
        let (g, h) = (s.space().dim_g(), s.space().dim_h());
        if g * h > 2 {
            continue;
        }
        let ctrl = ControllingAlgebra::new(s.clone()).unwrap();
        for r in all_linear_maps(F5, h, g, BUDGET).unwrap() {
            let rep = is_deformation_map(s, &r).unwrap();
            let mc = mc_defect(&ctrl, &ctrl.element(&r).unwrap())
                .unwrap()
                .is_zero();
            assert_eq!(rep.is_deformation_map, rep.graph_closed, "{}", fx.name);
            assert_eq!(rep.is_deformation_map, mc, "{}", fx.name);
        }
    }
}

#[test]
fn twisting_by_a_deformation_map_removes_the_curvature() {
    for fx in all_fixtures(F5).unwrap() {
        let s = &fx.structure;
        for r in enumerate_deformation_maps(s, BUDGET).unwrap() {
            let t = twist_omega(s, &r).unwrap();
            assert!(t.eta_r.is_zero(), "{}", fx.name);
            assert!(
                check_proto_twilled(&t.structure).unwrap().holds,
                "{}",
                fx.name
            );
            let dims = deformation_cohomology(s, &r, 1).unwrap();
            for d in &dims {
                assert_eq!(d.cohomology + d.coboundaries, d.cocycles, "{}", fx.name);
                assert!(d.cocycles <= d.cochains, "{}", fx.name);
            }
        }
    }
}

#[test]
fn governing_algebra_requires_a_maurer_cartan_base_point() {
    let fx = all_fixtures(F5)
        .unwrap()
        .into_iter()
        .find(|f| f.name == "general-eta")
        .unwrap();
    let ctrl = ControllingAlgebra::new(fx.structure.clone()).unwrap();
    let zero = ctrl
        .element(
            &deformap::MultiMap::zeros(
                F5,
                &[fx.structure.space().dim_h()],
                fx.structure.space().dim_g(),
            )
            .unwrap(),
        )
        .unwrap();
    assert!(matches!(
        Twisted::new(ctrl, zero),
        Err(Error::NotMaurerCartan)
    ));
}
