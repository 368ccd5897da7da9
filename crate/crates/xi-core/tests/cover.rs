mod common;

use common::{
    alpha_pool, braid_spec, closing_scene, colored_braid, crossing_companion, trefoil,
    wirtinger_h1, Excursion,
};
use num_traits::Zero;
use proptest::prelude::*;
use xi_core::cover::CoverComplex;
use xi_core::diagram::Scene;
use xi_core::linking::{linking_block, row_sums};
use xi_core::{Error, Rat};

/// A pooled 3-colorable α with one or two companions winding around it,
/// every companion lift closing.
fn scene_strategy(max_companions: usize) -> impl Strategy<Value = Scene> {
    let excursion = (0..2usize, 1..=2usize).prop_flat_map(|(which, d)| {
        prop::collection::vec(any::<bool>(), 2 * d)
            .prop_map(move |signs| Excursion { which, signs })
    });
    (
        0..alpha_pool().len(),
        1..=max_companions,
        0..8usize,
        prop::collection::vec(excursion, 1..=3),
    )
        .prop_map(|(i, m, at, mut ex)| {
            for c in 0..m {
                if !ex.iter().any(|e| e.which % m == c) {
                    ex.push(Excursion {
                        which: c,
                        signs: vec![true, false],
                    });
                }
            }
            let (n, alpha) = &alpha_pool()[i];
            closing_scene(*n, alpha, m, at, &ex)
        })
}

fn companions(scene: &Scene) -> Vec<String> {
    scene
        .components()
        .iter()
        .skip(1)
        .map(|c| c.name.clone())
        .collect()
}

#[test]
fn trefoil_cover_is_a_homology_sphere() {
    let s = trefoil();
    let cx = CoverComplex::build(&s, "c1").unwrap();
    assert!(cx.check_boundaries());
    let h = cx.homology();
    assert_eq!(h.betti, [1, 0, 0, 1]);
    assert!(h.torsion.is_empty());
    assert_eq!(wirtinger_h1(&s), (0, vec![]));
}

#[test]
fn uncolored_cover_is_three_spheres() {
    let s = Scene::new(braid_spec(3, &[1, 1, 1, 2, 2])).unwrap();
    let cx = CoverComplex::build(&s, "c1").unwrap();
    assert_eq!(cx.homology().betti, [3, 0, 0, 3]);
    assert_eq!(cx.euler_characteristic(), 0);
}

#[test]
fn split_g_is_rejected() {
    let s = colored_braid(3, &[1, 1, 1]).unwrap();
    assert!(matches!(
        CoverComplex::build(&s, "c1"),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn g_may_not_be_alpha() {
    let s = trefoil();
    assert!(matches!(
        CoverComplex::build(&s, "alpha"),
        Err(Error::Schema(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn boundary_of_boundary_vanishes(scene in scene_strategy(2)) {
        let g = crossing_companion(&scene).unwrap();
        let cx = CoverComplex::build(&scene, &g).unwrap();
        prop_assert!(cx.check_boundaries());
        let b = cx.homology().betti;
        prop_assert_eq!(b[0] as i64 - b[1] as i64 + b[2] as i64 - b[3] as i64, cx.euler_characteristic());
    }

    #[test]
    fn h1_matches_wirtinger_oracle(scene in scene_strategy(2)) {
        let g = crossing_companion(&scene).unwrap();
        let h = CoverComplex::build(&scene, &g).unwrap().homology();
        let (free, torsion) = wirtinger_h1(&scene);
        prop_assert_eq!(h.betti[0], 1);
        prop_assert_eq!(h.betti[1], free);
        prop_assert_eq!(h.torsion, torsion);
    }

    #[test]
    fn uncolored_blocks_are_scalar(scene in scene_strategy(2)) {
        let mut scene = scene;
        scene.set_coloring(Vec::new()).unwrap();
        let names = companions(&scene);
        for g in &names {
            for h in &names {
                if g == h {
                    continue;
                }
                let block = match linking_block(&scene, g, h) {
                    Ok(b) => b,
                    Err(Error::Unsupported(_)) => continue,
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                };
                let lk = Rat::from_integer(scene.s3_linking(g, h).unwrap().into());
                for a in 0..3 {
                    for b in 0..3 {
                        let want = if a == b { lk.clone() } else { Rat::zero() };
                        prop_assert_eq!(block.get(a, b), &want);
                    }
                }
            }
        }
    }

    #[test]
    fn sheet_sums_project_to_s3(scene in scene_strategy(2)) {
        let names = companions(&scene);
        for g in &names {
            for h in &names {
                if g == h {
                    continue;
                }
                let block = match linking_block(&scene, g, h) {
                    Ok(b) => b,
                    Err(Error::InfiniteOrder | Error::Unsupported(_)) => continue,
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                };
                let lk = Rat::from_integer(scene.s3_linking(g, h).unwrap().into());
                for s in row_sums(&block) {
                    prop_assert_eq!(&s, &lk);
                }
                for s in row_sums(&block.transpose()) {
                    prop_assert_eq!(&s, &lk);
                }
            }
        }
    }

    #[test]
    fn swapping_curves_transposes_the_block(scene in scene_strategy(2)) {
        let names = companions(&scene);
        if names.len() == 2 {
            let (g, h) = (&names[0], &names[1]);
            if let (Ok(gh), Ok(hg)) = (linking_block(&scene, g, h), linking_block(&scene, h, g)) {
                prop_assert_eq!(gh, hg.transpose());
            }
        }
    }
}
