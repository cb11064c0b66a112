use proptest::prelude::*;

use symcenter::angle::{angle_of, arc_midpoint, ccw_arc_length, cmp_direction, ArcMode, DEFAULT_ANGLE_TOL};
use symcenter::corpus::{circle_point, random_similarity, rng};
use symcenter::geom::{centroid, circumcircle, ratio, Similarity};
use symcenter::multiset_centers::{
    a_center_of_points, b_center_labeled_of_points, b_center_of_points, x_center_multiset, y_center_multiset,
};
use symcenter::oracle::{check_equivariance, lemma_aux_suite, CenterId};
use symcenter::polygon_centers::{x_center_polygon, y_center_polygon};
use symcenter::scene::{SceneFile, Shape};
use symcenter::value::CenterValue;
use symcenter::{Angle, LabeledMultiset, Multiset, Point, Polygon, Symmetric};

fn pts(v: &[(i64, i64)]) -> Vec<Point> {
    v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
}

fn points(max: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, -6i64..=6), 1..=max)
}

fn similarity(seed: u64) -> Similarity {
    random_similarity(&mut rng(seed), true)
}

fn same(a: &CenterValue, b: &CenterValue, scale: f64) -> bool {
    match (a.exact_point(), b.exact_point()) {
        (Some(p), Some(q)) => p == q,
        _ => a.distance(b).to_f64() <= 1e-9 * scale.max(1.0),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn angle_order_matches_exact_direction_order(a in (-50i64..=50, 1i64..=9, -50i64..=50, 1i64..=9),
                                                 b in (-50i64..=50, 1i64..=9, -50i64..=50, 1i64..=9)) {
        let u = Point::new(ratio(a.0, a.1), ratio(a.2, a.3));
        let v = Point::new(ratio(b.0, b.1), ratio(b.2, b.3));
        prop_assume!(!u.is_zero() && !v.is_zero());
        let o = Point::origin();
        let (au, av) = (angle_of(&o, &u).unwrap(), angle_of(&o, &v).unwrap());
        prop_assert_eq!(au.total_cmp(&av), cmp_direction(&u, &v));
    }

    #[test]
    fn arc_lengths_add_to_a_turn(a in 0i64..360, b in 0i64..360) {
        let (x, y) = (Angle::turns_ratio(a, 360), Angle::turns_ratio(b, 360));
        let sum = ccw_arc_length(x, y).add(ccw_arc_length(y, x));
        if a == b {
            prop_assert!(sum.eq_tol(&Angle::zero(), 0.0));
        } else {
            prop_assert_eq!(ccw_arc_length(x, y).exact().unwrap() + ccw_arc_length(y, x).exact().unwrap(),
                            num_rational::Ratio::from_integer(1));
        }
    }

    #[test]
    fn smallest_arc_midpoint_is_equidistant(a in 0i64..1000, b in 0i64..1000) {
        prop_assume!((a - b).abs() != 500 && a != b);
        let (x, y) = (Angle::turns_ratio(a, 1000), Angle::turns_ratio(b, 1000));
        let m = arc_midpoint(x, y, ArcMode::Smallest, DEFAULT_ANGLE_TOL).unwrap();
        let d = |p: Angle, q: Angle| {
            let l = ccw_arc_length(p, q).value().to_f64();
            l.min(1.0 - l)
        };
        prop_assert!((d(x, m) - d(y, m)).abs() < 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn centroid_and_circumcircle_commute_with_similarities(v in points(7), seed in any::<u64>()) {
        let p = pts(&v);
        let t = similarity(seed);
        let moved: Vec<Point> = p.iter().map(|q| t.apply(q)).collect();
        prop_assert_eq!(centroid(&moved).unwrap(), t.apply(&centroid(&p).unwrap()));
        if let (Ok(c), Ok(d)) = (circumcircle(&p), circumcircle(&moved)) {
            prop_assert_eq!(d.center, t.apply(&c.center));
            prop_assert_eq!(d.radius_sq, c.radius_sq * t.scale_sq());
        }
    }

    #[test]
    fn symmetry_group_conjugates(v in points(7), seed in any::<u64>()) {
        let m = Multiset::new(pts(&v)).unwrap();
        let t = similarity(seed);
        let moved = m.transform(&t);
        prop_assert_eq!(moved.symmetry_group(), m.symmetry_group().transform(&t));
        prop_assert_eq!(moved.classify(), m.classify());
    }

    #[test]
    fn fixed_set_is_fixed_pointwise(v in points(7), samples in prop::collection::vec((-9i64..=9, 1i64..=4, -9i64..=9), 20)) {
        let m = Multiset::new(pts(&v)).unwrap();
        let g = m.symmetry_group();
        let fs = m.fixed_set();
        for (a, d, b) in samples {
            let x = fs.sample(&ratio(a, d), &ratio(b, d));
            for e in &g.elements {
                prop_assert_eq!(e.apply(&x), x.clone());
            }
        }
    }

    #[test]
    fn polygon_group_is_a_subgroup_of_the_vertex_group(v in prop::collection::vec((-4i64..=4, -4i64..=4), 3..=7)) {
        let p = Polygon::new(pts(&v)).unwrap();
        let vg = p.vertex_multiset().symmetry_group();
        for e in &p.symmetry_group().elements {
            prop_assert!(vg.elements.contains(e) || vg.continuous);
        }
    }

    #[test]
    fn multiset_centers_are_equivariant(v in points(7), seed in any::<u64>()) {
        let s = Shape::Multiset(Multiset::new(pts(&v)).unwrap());
        for id in [CenterId::XMultiset, CenterId::YMultiset] {
            let r = check_equivariance(id, &s, 5, seed, 1e-6);
            prop_assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn polygon_centers_are_equivariant(v in prop::collection::vec((-5i64..=5, -5i64..=5), 3..=7), seed in any::<u64>()) {
        let mut sorted = v.clone();
        sorted.sort();
        sorted.dedup();
        prop_assume!(sorted.len() == v.len());
        let s = Shape::Polygon(Polygon::new(pts(&v)).unwrap());
        for id in [CenterId::XPolygon, CenterId::YPolygon] {
            let r = check_equivariance(id, &s, 5, seed, 1e-6);
            prop_assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn polygon_centers_ignore_dihedral_relabeling(v in prop::collection::vec((-5i64..=5, -5i64..=5), 3..=7),
                                                   shift in 0usize..7, reverse in any::<bool>()) {
        let mut sorted = v.clone();
        sorted.sort();
        sorted.dedup();
        prop_assume!(sorted.len() == v.len());
        let p = Polygon::new(pts(&v)).unwrap();
        let q = p.relabeled(shift % v.len(), reverse);
        let ext = 6.0;
        prop_assert!(same(&x_center_polygon(&p).unwrap(), &x_center_polygon(&q).unwrap(), ext));
        prop_assert!(same(&y_center_polygon(&p).unwrap(), &y_center_polygon(&q).unwrap(), ext));
    }

    #[test]
    fn collinear_branch_ignores_dihedral_relabeling(ts in prop::collection::vec(-8i64..=8, 3..=7),
                                                    shift in 0usize..7, reverse in any::<bool>(), seed in any::<u64>()) {
        let mut sorted = ts.clone();
        sorted.sort();
        sorted.dedup();
        prop_assume!(sorted.len() == ts.len());
        let t = similarity(seed);
        let p = Polygon::new(ts.iter().map(|&x| Point::from_ints(x, 0)).collect()).unwrap().transform(&t);
        let q = p.relabeled(shift % ts.len(), reverse);
        let (a, b) = (x_center_polygon(&p).unwrap(), x_center_polygon(&q).unwrap());
        prop_assert!(a.is_exact() && b.is_exact());
        prop_assert_eq!(a.exact_point(), b.exact_point());
    }

    #[test]
    fn polygon_x_delegates_when_groups_match(v in prop::collection::vec((-5i64..=5, -5i64..=5), 3..=7)) {
        let p = Polygon::new(pts(&v)).unwrap();
        let vm = p.vertex_multiset();
        prop_assume!(p.symmetry_group() == vm.symmetry_group());
        prop_assert!(same(&x_center_polygon(&p).unwrap(), &x_center_multiset(&vm).unwrap(), 6.0));
        prop_assert!(same(&y_center_polygon(&p).unwrap(), &y_center_multiset(&vm).unwrap(), 6.0));
    }

    #[test]
    fn cyclic_centers_are_equivariant(params in prop::collection::btree_set((-12i64..=12, 1i64..=7), 2..=6),
                                      labels in prop::collection::vec(1u64..=2, 6), seed in any::<u64>()) {
        let mut p: Vec<Point> = params.iter().map(|&(a, b)| circle_point(&ratio(a, b))).collect();
        p.sort();
        p.dedup();
        prop_assume!(p.len() >= 2);
        let t = similarity(seed);
        let m = Multiset::new(p.clone()).unwrap();
        let moved = m.transform(&t);
        let b = b_center_of_points(&m).unwrap();
        prop_assert!(same(&b_center_of_points(&moved).unwrap(), &b.transform(&t), 30.0));
        if let Ok(a) = a_center_of_points(&m) {
            prop_assert!(same(&a_center_of_points(&moved).unwrap(), &a.transform(&t), 30.0));
        }
        let l = LabeledMultiset::new(p.clone(), labels[..p.len()].to_vec()).unwrap();
        let bl = b_center_labeled_of_points(&l).unwrap();
        prop_assert!(same(&b_center_labeled_of_points(&l.transform(&t)).unwrap(), &bl.transform(&t), 30.0));
    }

    #[test]
    fn scene_files_round_trip(v in points(6), labeled in any::<bool>(), den in 1i64..=9) {
        let p: Vec<Point> = v.iter().map(|&(x, y)| Point::new(ratio(x, den), ratio(y, den))).collect();
        let shape = if labeled {
            Shape::Labeled(LabeledMultiset::new(p.clone(), (0..p.len() as u64).collect()).unwrap())
        } else {
            Shape::Multiset(Multiset::new(p).unwrap())
        };
        let file = SceneFile::from_shape(&shape);
        let again = SceneFile::parse(&file.to_json()).unwrap();
        prop_assert_eq!(&again, &file);
        prop_assert_eq!(again.to_json(), file.to_json());
    }
}

#[test]
fn suites_are_deterministic() {
    assert_eq!(lemma_aux_suite(5, 9).to_json(), lemma_aux_suite(5, 9).to_json());
    let s = Shape::Multiset(Multiset::new(pts(&[(0, 0), (4, 0), (1, 2)])).unwrap());
    let a = check_equivariance(CenterId::YMultiset, &s, 20, 3, 1e-9);
    let b = check_equivariance(CenterId::YMultiset, &s, 20, 3, 1e-9);
    assert_eq!(a.to_json(), b.to_json());
}
