use island_census::census::{alt_sum, census, census_brute, polygons};
use island_census::geometry::{hull2d, in_triangle_strict};
use island_census::identities::{catalogue, check_recurrence, closed_form, weighted_sum};
use island_census::io::{parse_points, write_points};
use island_census::space::census3;
use island_census::{orient2d, orient3d, Point2, Point3, PointSet, Sign};
use proptest::prelude::*;

fn planar_set(max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec((0i64..1000, 0i64..1000), 3..=max).prop_filter_map("general position", |c| {
        PointSet::planar(c.into_iter().map(|(x, y)| Point2::new(x, y)).collect()).ok()
    })
}

fn spatial_set(max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec((0i64..200, 0i64..200, 0i64..200), 4..=max).prop_filter_map("general position", |c| {
        PointSet::spatial(c.into_iter().map(|(x, y, z)| Point3::new(x, y, z)).collect()).ok()
    })
}

fn big() -> impl Strategy<Value = Point2> {
    (any::<i64>(), any::<i64>()).prop_map(|(x, y)| Point2::new(x >> 1, y >> 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn census_matches_subset_oracle(s in planar_set(9)) {
        prop_assert_eq!(census(&s).unwrap(), census_brute(&s, 12).unwrap());
    }

    #[test]
    fn census_ignores_labels(s in planar_set(8), rot in 0usize..8) {
        let pts = s.points2().unwrap().to_vec();
        let mut moved = pts.clone();
        moved.rotate_left(rot % pts.len());
        moved.reverse();
        let t = PointSet::planar(moved).unwrap();
        prop_assert_eq!(census(&s).unwrap(), census(&t).unwrap());
    }

    #[test]
    fn census_ignores_translation(s in planar_set(8), dx in -500i64..500, dy in -500i64..500) {
        let moved: Vec<Point2> = s.points2().unwrap().iter().map(|p| Point2::new(p.x + dx, p.y + dy)).collect();
        prop_assert_eq!(census(&s).unwrap(), census(&PointSet::planar(moved).unwrap()).unwrap());
    }

    #[test]
    fn orientation_is_antisymmetric(a in big(), b in big(), c in big()) {
        let s = orient2d(a, b, c);
        prop_assert_eq!(orient2d(b, a, c), s.flip());
        prop_assert_eq!(orient2d(b, c, a), s);
        prop_assert_eq!(orient2d(a, c, b), s.flip());
    }

    #[test]
    fn orientation3_is_antisymmetric(v in prop::array::uniform12(any::<i64>())) {
        let p = |i: usize| Point3::new(v[3 * i] >> 1, v[3 * i + 1] >> 1, v[3 * i + 2] >> 1);
        let (a, b, c, d) = (p(0), p(1), p(2), p(3));
        let s = orient3d(a, b, c, d);
        prop_assert_eq!(orient3d(b, a, c, d), s.flip());
        prop_assert_eq!(orient3d(b, c, a, d), s);
        prop_assert_eq!(orient3d(a, b, d, c), s.flip());
    }

    #[test]
    fn hull_matches_triangle_oracle(s in planar_set(12)) {
        let pts = s.points2().unwrap();
        let n = pts.len();
        let idx: Vec<usize> = (0..n).collect();
        let mut hull = hull2d(pts, &idx);
        for i in 0..hull.len() {
            let (a, b, c) = (hull[i], hull[(i + 1) % hull.len()], hull[(i + 2) % hull.len()]);
            prop_assert_eq!(orient2d(pts[a], pts[b], pts[c]), Sign::Positive);
        }
        hull.sort_unstable();
        let extreme: Vec<usize> = (0..n)
            .filter(|&q| {
                !(0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| {
                    q != a && q != b && q != c && in_triangle_strict(pts[a], pts[b], pts[c], pts[q])
                })))
            })
            .collect();
        prop_assert_eq!(hull, extreme);
    }

    #[test]
    fn polygons_are_convex_and_unique(s in planar_set(9)) {
        let pts = s.points2().unwrap();
        let records = polygons(&s).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for r in &records {
            let k = r.k();
            for i in 0..k {
                let (a, b, c) = (r.vertices[i], r.vertices[(i + 1) % k], r.vertices[(i + 2) % k]);
                prop_assert_eq!(orient2d(pts[a], pts[b], pts[c]), Sign::Positive);
            }
            let mut v = r.vertices.clone();
            v.sort_unstable();
            prop_assert!(seen.insert(v));
        }
    }

    #[test]
    fn catalogue_sums_depend_only_on_n(s in planar_set(9)) {
        let t = census(&s).unwrap();
        prop_assert_eq!(alt_sum(&t, 1), (s.len() - s.h()) as i128);
        for w in catalogue(s.len(), 2) {
            prop_assert_eq!(weighted_sum(&t, &w).unwrap(), closed_form(&w, s.len(), 2).unwrap());
        }
    }

    #[test]
    fn spatial_census_matches_oracle(s in spatial_set(7)) {
        prop_assert_eq!(census3(&s, 12).unwrap(), census_brute(&s, 12).unwrap());
    }

    #[test]
    fn point_files_round_trip(s in planar_set(10)) {
        let text = write_points(&s, &[]);
        let back = parse_points(&text).unwrap();
        prop_assert_eq!(write_points(&back, &[]), text);
        prop_assert_eq!(back, s);
    }
}

#[test]
fn catalogue_weights_satisfy_recurrence() {
    for w in catalogue(12, 2) {
        assert!(check_recurrence(&w, 14, 8).unwrap(), "{}", w.name);
    }
}
