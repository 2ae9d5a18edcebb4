//! Convex position: the direct hull test, orderings under which every triple
//! is counterclockwise, subfamily search, the tangent-rotation ordering, the
//! transversal/convex-position dichotomy, and closed-form size bounds.

mod bounds;
mod dichotomy;
mod rotation;

pub use bounds::{binomial, bound_lemma1, bound_m, bound_pach_toth};
pub use dichotomy::{dichotomy, DichotomyOutcome};
pub use rotation::{
    is_case_two, orientation_transitivity_check, tangent_rotation_order, transitivity_violations,
    RotationOrder,
};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::geom::{hull_of_bodies, Sign};
use crate::predicates::{family_hull, OrientationTable};

/// Largest family for which [`exists_consistent_order`] searches orderings.
pub const ORDER_SEARCH_LIMIT: usize = 10;

/// Largest family for which subfamilies are enumerated.
pub const SUBSET_SEARCH_LIMIT: usize = 15;

/// An ordering of members (indices into the family) under which every
/// ordered triple admits the counterclockwise orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexPositionCertificate {
    pub ordering: Vec<usize>,
}

impl ConvexPositionCertificate {
    /// Distinct valid members, every triple in ordering order counterclockwise.
    pub fn verify(&self, f: &Family) -> Result<bool> {
        let mut seen = HashSet::new();
        if !self.ordering.iter().all(|&i| i < f.len() && seen.insert(i)) {
            return Ok(false);
        }
        let sub = f.subfamily(&self.ordering);
        let table = OrientationTable::new(&sub)?;
        Ok(all_triples_admit(
            &table,
            &(0..sub.len()).collect::<Vec<_>>(),
            Sign::Positive,
        ))
    }

    /// The reversed ordering, under which every triple admits clockwise.
    pub fn reversed(&self) -> Vec<usize> {
        self.ordering.iter().rev().copied().collect()
    }
}

/// Removing any single member changes the hull of the family.
///
/// Hulls are compared by mutual vertex containment: the hull without a member
/// is always contained in the full hull, so they are equal iff every vertex of
/// the full hull lies in the smaller one.
pub fn in_convex_position_direct(f: &Family) -> bool {
    if f.len() <= 1 {
        return true;
    }
    let full = family_hull(f);
    (0..f.len()).all(|a| {
        let rest = f.without(a);
        let smaller = family_hull(&rest);
        !full.vertices().iter().all(|v| smaller.contains(v))
    })
}

/// Members in order of first appearance along the hull boundary, starting at
/// the first member's arc; counterclockwise traversal for `Sign::Positive`,
/// clockwise for `Sign::Negative`.
pub fn canonical_order(f: &Family, convention: Sign) -> Result<Vec<usize>> {
    if convention == Sign::Zero {
        return Err(Error::InvalidArgument(
            "orientation convention must be + or -".into(),
        ));
    }
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let hull = hull_of_bodies(f.bodies())?;
    let mut word = hull.word;
    if convention == Sign::Negative {
        word.reverse();
    }
    if let Some(missing) = (0..f.len()).find(|i| !word.contains(i)) {
        return Err(Error::NotOnHull(f.id(missing).into()));
    }
    let start = word
        .iter()
        .position(|&b| b == 0)
        .expect("member 0 is on the hull");
    let mut order = Vec::with_capacity(f.len());
    for step in 0..word.len() {
        let b = word[(start + step) % word.len()];
        if !order.contains(&b) {
            order.push(b);
        }
    }
    Ok(order)
}

fn all_triples_admit(table: &OrientationTable, order: &[usize], sign: Sign) -> bool {
    let n = order.len();
    (0..n).all(|x| {
        (x + 1..n)
            .all(|y| (y + 1..n).all(|z| table.get(order[x], order[y], order[z]).contains(sign)))
    })
}

/// Backtracking search for an ordering of `members` whose triples all admit
/// `sign`. Rotating such an ordering keeps the property, so the first member
/// is fixed.
fn search_ordering(table: &OrientationTable, members: &[usize], sign: Sign) -> Option<Vec<usize>> {
    fn extend(
        table: &OrientationTable,
        order: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        sign: Sign,
    ) -> bool {
        if remaining.is_empty() {
            return true;
        }
        for idx in 0..remaining.len() {
            let c = remaining[idx];
            let ok = (0..order.len()).all(|x| {
                (x + 1..order.len()).all(|y| table.get(order[x], order[y], c).contains(sign))
            });
            if !ok {
                continue;
            }
            remaining.remove(idx);
            order.push(c);
            if extend(table, order, remaining, sign) {
                return true;
            }
            order.pop();
            remaining.insert(idx, c);
        }
        false
    }
    let (&first, rest) = members.split_first()?;
    let mut order = vec![first];
    let mut remaining = rest.to_vec();
    extend(table, &mut order, &mut remaining, sign).then_some(order)
}

/// An ordering under which every triple is counterclockwise, if one exists.
///
/// When the direct test passes, the canonical boundary order is tried first;
/// otherwise (or if it fails to verify) all orderings are searched, which is
/// limited to [`ORDER_SEARCH_LIMIT`] members.
pub fn exists_consistent_order(f: &Family) -> Result<Option<ConvexPositionCertificate>> {
    if f.len() <= 2 {
        return Ok(Some(ConvexPositionCertificate {
            ordering: (0..f.len()).collect(),
        }));
    }
    let table = OrientationTable::new(f)?;
    if in_convex_position_direct(f) {
        if let Ok(order) = canonical_order(f, Sign::Positive) {
            if all_triples_admit(&table, &order, Sign::Positive) {
                return Ok(Some(ConvexPositionCertificate { ordering: order }));
            }
        }
    }
    exhaustive_consistent_order(f, &table)
}

/// Exhaustive ordering search, skipping the boundary-order fast path.
pub fn exhaustive_consistent_order(
    f: &Family,
    table: &OrientationTable,
) -> Result<Option<ConvexPositionCertificate>> {
    if f.len() > ORDER_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            size: f.len(),
            limit: ORDER_SEARCH_LIMIT,
        });
    }
    let members: Vec<usize> = (0..f.len()).collect();
    Ok(search_ordering(table, &members, Sign::Positive)
        .map(|ordering| ConvexPositionCertificate { ordering }))
}

/// A subfamily in convex position with its boundary-order certificate, both
/// in indices of the original family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexSubfamily {
    pub members: Vec<usize>,
    pub certificate: ConvexPositionCertificate,
}

fn check_subset_limit(f: &Family) -> Result<()> {
    if f.len() > SUBSET_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            size: f.len(),
            limit: SUBSET_SEARCH_LIMIT,
        });
    }
    Ok(())
}

/// Level-wise enumeration of subfamilies in convex position, in increasing
/// size, each level in lexicographic order. A set is tested only if all of
/// its one-smaller subsets passed, since convex position is inherited by
/// subfamilies. Stops after level `max_size` or at the first empty level.
fn convex_levels(f: &Family, max_size: usize) -> Vec<Vec<Vec<usize>>> {
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..f.len()).map(|i| vec![i]).collect()];
    while levels.last().unwrap()[0].len() < max_size {
        let prev = levels.last().unwrap();
        let known: HashSet<&Vec<usize>> = prev.iter().collect();
        let mut next = Vec::new();
        for set in prev {
            for extra in set.last().unwrap() + 1..f.len() {
                let mut cand = set.clone();
                cand.push(extra);
                let all_subsets_pass = (0..cand.len() - 1).all(|drop| {
                    let mut sub = cand.clone();
                    sub.remove(drop);
                    known.contains(&sub)
                });
                if all_subsets_pass && in_convex_position_direct(&f.subfamily(&cand)) {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

fn certify(f: &Family, members: Vec<usize>) -> Result<ConvexSubfamily> {
    let local = canonical_order(&f.subfamily(&members), Sign::Positive)?;
    let ordering = local.iter().map(|&i| members[i]).collect();
    Ok(ConvexSubfamily {
        members,
        certificate: ConvexPositionCertificate { ordering },
    })
}

/// A maximum-cardinality subfamily in convex position (the lexicographically
/// smallest among those of maximum size). Limited to
/// [`SUBSET_SEARCH_LIMIT`] members.
pub fn largest_convex_subfamily(f: &Family) -> Result<ConvexSubfamily> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    check_subset_limit(f)?;
    let levels = convex_levels(f, f.len());
    let best = levels.last().unwrap()[0].clone();
    certify(f, best)
}

/// The lexicographically smallest subfamily of exactly `size` members in
/// convex position, if any.
pub fn convex_subfamily_of_size(f: &Family, size: usize) -> Result<Option<ConvexSubfamily>> {
    if size == 0 || size > f.len() {
        return Ok(None);
    }
    check_subset_limit(f)?;
    let levels = convex_levels(f, size);
    match levels.last() {
        Some(level) if level[0].len() == size => certify(f, level[0].clone()).map(Some),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::famgen::fixture;
    use crate::geom::{ConvexBody, Point};

    fn tri(id: &str, x: i64, y: i64) -> ConvexBody {
        ConvexBody::new(
            id,
            vec![
                Point::from_ints(x, y),
                Point::from_ints(x + 1, y),
                Point::from_ints(x, y + 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn direct_test_examples() {
        let tri3 = fixture("tri3").unwrap();
        assert!(in_convex_position_direct(&tri3));
        let mut bodies = tri3.bodies().to_vec();
        bodies.push(tri("c", 2, 1));
        assert!(!in_convex_position_direct(&Family::new(bodies).unwrap()));
        let hidden = fixture("hidden4").unwrap();
        assert!(!in_convex_position_direct(&hidden));
        for [i, j, k] in crate::predicates::triples(4) {
            assert!(in_convex_position_direct(&hidden.subfamily(&[i, j, k])));
        }
    }

    #[test]
    fn canonical_order_examples() {
        let tri3 = fixture("tri3").unwrap();
        assert_eq!(
            canonical_order(&tri3, Sign::Positive).unwrap(),
            vec![0, 1, 2]
        );
        let relisted = tri3.subfamily(&[1, 0, 2]);
        // listed (2, 1, 3): first appearance from body 2 is 2, 3, 1
        let order = canonical_order(&relisted, Sign::Positive).unwrap();
        assert_eq!(relisted.ids(&order), vec!["2", "3", "1"]);
        assert_eq!(
            canonical_order(&tri3, Sign::Negative).unwrap(),
            vec![0, 2, 1]
        );
        let nested = fixture("nested").unwrap();
        assert!(matches!(
            canonical_order(&nested, Sign::Positive),
            Err(Error::NotOnHull(_))
        ));
    }

    #[test]
    fn consistent_order_examples() {
        let tri3 = fixture("tri3").unwrap();
        let cert = exists_consistent_order(&tri3).unwrap().unwrap();
        assert_eq!(cert.ordering, vec![0, 1, 2]);
        assert!(cert.verify(&tri3).unwrap());
        assert_eq!(
            exists_consistent_order(&fixture("hidden4").unwrap()).unwrap(),
            None
        );
        let pair = tri3.subfamily(&[0, 1]);
        assert!(exists_consistent_order(&pair).unwrap().is_some());
    }

    #[test]
    fn subfamily_examples() {
        let tri3 = fixture("tri3").unwrap();
        assert_eq!(
            largest_convex_subfamily(&tri3).unwrap().members,
            vec![0, 1, 2]
        );
        let hidden = fixture("hidden4").unwrap();
        let best = largest_convex_subfamily(&hidden).unwrap();
        assert_eq!(best.members, vec![0, 1, 2]);
        assert!(best.certificate.verify(&hidden).unwrap());
        assert!(convex_subfamily_of_size(&hidden, 4).unwrap().is_none());
        let stabbed = fixture("stabbed7").unwrap();
        assert!(largest_convex_subfamily(&stabbed).unwrap().members.len() >= 4);
    }

    #[test]
    fn size_limit() {
        let bodies: Vec<ConvexBody> = (0..16)
            .map(|i| tri(&i.to_string(), 3 * i, (i * i) % 7))
            .collect();
        let f = Family::new(bodies).unwrap();
        assert!(matches!(
            largest_convex_subfamily(&f),
            Err(Error::SizeLimit { .. })
        ));
    }
}
