//! Invariants of the predicates, orderings and order types.

use convex_order::convex_position::{
    bound_m, bound_pach_toth, canonical_order, exists_consistent_order, in_convex_position_direct,
    largest_convex_subfamily,
};
use convex_order::famgen::{generate, GenKind, GenSpec};
use convex_order::geom::hull_of_bodies;
use convex_order::order_type::{chirotope, search_representation, Chirotope, RepresentationSearch};
use convex_order::predicates::{check_assumptions, is_pairwise_noncrossing, orientations, triples};
use convex_order::{Family, Sign};
use proptest::prelude::*;

fn family(
    kinds: &'static [GenKind],
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Family> {
    (any::<u64>(), sizes, prop::sample::select(kinds))
        .prop_filter_map("generation failed", |(seed, count, kind)| {
            generate(&GenSpec::new(seed, count, kind)).ok()
        })
}

const NONCROSSING: &[GenKind] = &[
    GenKind::DisjointOnCircle,
    GenKind::DisjointRandom,
    GenKind::NoncrossingNested,
    GenKind::StabbedByLine,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_families_meet_the_assumptions(f in family(&GenKind::ALL, 1..=7)) {
        prop_assert!(check_assumptions(&f).is_empty());
    }

    #[test]
    fn orientation_sets_follow_permutations(f in family(NONCROSSING, 3..=5)) {
        for [i, j, k] in triples(f.len()) {
            let o = orientations(&f[i], &f[j], &f[k]).unwrap();
            prop_assert_eq!(orientations(&f[j], &f[k], &f[i]).unwrap(), o);
            prop_assert_eq!(orientations(&f[j], &f[i], &f[k]).unwrap(), o.reversed());
            prop_assert_eq!(orientations(&f[i], &f[k], &f[j]).unwrap(), o.reversed());
        }
    }

    #[test]
    fn convex_position_is_hereditary(f in family(NONCROSSING, 3..=7)) {
        if in_convex_position_direct(&f) {
            for i in 0..f.len() {
                prop_assert!(in_convex_position_direct(&f.without(i)));
            }
        }
    }

    #[test]
    fn certificates_verify(f in family(NONCROSSING, 3..=7)) {
        prop_assert!(is_pairwise_noncrossing(&f).unwrap());
        match exists_consistent_order(&f).unwrap() {
            Some(cert) => {
                prop_assert!(cert.verify(&f).unwrap());
                let mut sorted = cert.ordering.clone();
                sorted.sort();
                prop_assert_eq!(sorted, (0..f.len()).collect::<Vec<_>>());
            }
            None => prop_assert!(!in_convex_position_direct(&f)),
        }
        let best = largest_convex_subfamily(&f).unwrap();
        prop_assert!(best.certificate.verify(&f).unwrap());
        prop_assert!(in_convex_position_direct(&f.subfamily(&best.members)));
    }

    #[test]
    fn reversed_convention_reverses_the_order(f in family(NONCROSSING, 3..=7)) {
        prop_assume!(in_convex_position_direct(&f));
        // with a body owning two arcs, first appearance is not a plain reversal
        prop_assume!(hull_of_bodies(f.bodies()).unwrap().word.len() == f.len());
        let plus = canonical_order(&f, Sign::Positive).unwrap();
        let minus = canonical_order(&f, Sign::Negative).unwrap();
        // same cyclic sequence read the other way, both starting at the same body
        prop_assert_eq!(plus[0], minus[0]);
        let mut tail: Vec<usize> = plus[1..].to_vec();
        tail.reverse();
        prop_assert_eq!(&minus[1..], &tail[..]);
    }

    #[test]
    fn chirotope_is_alternating(f in family(&[GenKind::DisjointOnCircle, GenKind::DisjointRandom], 3..=6)) {
        let Ok(chi) = chirotope(&f) else { return Ok(()) };
        let n = chi.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = chi.sign(i, j, k);
                    prop_assert_eq!(chi.sign(j, k, i), s);
                    prop_assert_eq!(chi.sign(j, i, k), s.flip());
                    if i == j || j == k || i == k {
                        prop_assert_eq!(s, Sign::Zero);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn representations_reproduce_the_chirotope(f in family(&[GenKind::DisjointOnCircle, GenKind::DisjointRandom], 3..=5)) {
        let Ok(chi) = chirotope(&f) else { return Ok(()) };
        if let RepresentationSearch::Found(cert) = search_representation(&f, 200_000, 7).unwrap() {
            prop_assert!(cert.verify(&f).unwrap());
            let placed: Vec<_> = cert.bijection.iter().map(|&b| cert.points[b].clone()).collect();
            let from_points = Chirotope::from_points(chi.ground().to_vec(), &placed).unwrap();
            prop_assert_eq!(from_points, chi);
        }
    }
}

#[test]
fn m_bound_never_exceeds_pach_toth() {
    for n in 3..=40 {
        assert!(
            bound_m(n).unwrap() <= bound_pach_toth(n).unwrap(),
            "n = {n}"
        );
    }
}
