//! Library decisions against brute-force oracles on generated inputs.

mod common;

use common::{naive_hull, oracle_disconnects, oracle_orientations};
use convex_order::famgen::{generate, GenKind, GenSpec};
use convex_order::geom::{boundary_arc_components, convex_hull, ArcComponents};
use convex_order::predicates::{best_transversal, check_assumptions, disconnects, orientations};
use convex_order::{ConvexBody, Family, Line, Point, Sign};
use proptest::prelude::*;

fn points(max: i64, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec((-max..=max, -max..=max), len)
        .prop_map(|v| v.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect())
}

fn body(id: &'static str, max: i64) -> impl Strategy<Value = ConvexBody> {
    points(max, 1..=6).prop_map(move |p| ConvexBody::hull_of(id, &p).unwrap())
}

fn family(max_count: usize) -> impl Strategy<Value = Family> {
    (
        any::<u64>(),
        3..=max_count,
        prop::sample::select(GenKind::ALL.to_vec()),
    )
        .prop_filter_map("generation failed", |(seed, count, kind)| {
            generate(&GenSpec::new(seed, count, kind)).ok()
        })
}

/// Number of bodies met by the line through `p` and `q`.
fn met(f: &Family, p: &Point, q: &Point) -> usize {
    Line::through(p, q).map_or(0, |l| f.iter().filter(|b| l.meets(b)).count())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hull_matches_brute_force(pts in points(12, 1..=14)) {
        let fast = convex_hull(&pts);
        let slow = naive_hull(&pts);
        prop_assert_eq!(fast.len(), slow.len());
        // same cycle, possibly rotated
        let start = slow.iter().position(|p| *p == fast[0]).expect("shared vertex");
        for (i, p) in fast.iter().enumerate() {
            prop_assert_eq!(p, &slow[(start + i) % slow.len()]);
        }
    }

    #[test]
    fn triple_orientations_match_sampling(a in body("a", 20), b in body("b", 20), c in body("c", 20)) {
        let f = Family::new(vec![a, b, c]).unwrap();
        prop_assume!(check_assumptions(&f).is_empty());
        let Ok(set) = orientations(&f[0], &f[1], &f[2]) else { return Ok(()) };
        let (ccw, cw) = oracle_orientations(&f[0], &f[1], &f[2]);
        prop_assert_eq!(set.contains(Sign::Positive), ccw);
        prop_assert_eq!(set.contains(Sign::Negative), cw);
    }

    #[test]
    fn arc_components_count_sampled_runs(a in body("a", 10), b in body("b", 10)) {
        // walk the boundary of `a` densely and count runs inside `b`
        let samples = common::boundary_samples(&[&a]);
        prop_assume!(a.vertices().len() >= 3);
        let inside: Vec<bool> = samples.iter().map(|p| b.contains(p)).collect();
        let n = inside.len();
        let runs = (0..n).filter(|&i| inside[i] && !inside[(i + n - 1) % n]).count();
        match boundary_arc_components(&a, &b) {
            ArcComponents::All => prop_assert!(inside.iter().all(|&x| x)),
            ArcComponents::Count(k) => {
                prop_assert!(!inside.iter().all(|&x| x));
                // sampling can miss a tiny piece but never invents one
                prop_assert!(runs <= k, "sampled {} runs, library {}", runs, k);
                if k == 0 {
                    prop_assert_eq!(runs, 0);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn disconnection_matches_sampling(f in family(6)) {
        let bodies: Vec<&ConvexBody> = f.iter().collect();
        for x in 0..f.len() {
            prop_assert_eq!(disconnects(x, &f), oracle_disconnects(x, &bodies), "body {}", x);
        }
    }

    #[test]
    fn best_transversal_is_maximum(f in family(6)) {
        let cert = best_transversal(&f).expect("a line meets at least one body");
        prop_assert!(cert.verify(&f));
        // a line meeting k bodies can be moved onto two body vertices
        let verts: Vec<&Point> = f.iter().flat_map(|b| b.vertices()).collect();
        let mut oracle = 1;
        for (i, p) in verts.iter().enumerate() {
            for q in &verts[i + 1..] {
                oracle = oracle.max(met(&f, p, q));
            }
        }
        prop_assert_eq!(cert.members.len(), oracle);
    }
}
