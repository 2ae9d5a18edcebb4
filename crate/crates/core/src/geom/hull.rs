use std::borrow::Borrow;

use super::{orient3, ConvexBody, Line, Point, Scalar, Sign};
use crate::error::{Error, Result};

/// Strictly convex hull in counterclockwise order, starting at the
/// lexicographically smallest point. Degenerate inputs give one or two points.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient3(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Sign::Positive
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient3(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Sign::Positive
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// A maximal piece of the hull boundary that belongs to a single body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullArc {
    /// Index of the owning body in the input list.
    pub body: usize,
    /// The piece as a polyline in counterclockwise order (a single point when
    /// the body only touches the boundary at a hull vertex).
    pub points: Vec<Point>,
}

/// Convex hull of a union of bodies with the bodies' boundary pieces labeled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledHull {
    pub hull: ConvexBody,
    /// Counterclockwise, cyclic. Hull edges between arcs of different bodies
    /// (bridges) are not represented.
    pub arcs: Vec<HullArc>,
    /// Body indices of `arcs`; no two cyclically adjacent entries are equal.
    pub word: Vec<usize>,
}

impl LabeledHull {
    /// True iff `pattern` occurs as a subsequence of some rotation of the word.
    pub fn has_cyclic_subsequence(&self, pattern: &[usize]) -> bool {
        cyclic_subsequence(&self.word, pattern)
    }

    pub fn contributes(&self, body: usize) -> bool {
        self.word.contains(&body)
    }
}

pub(crate) fn cyclic_subsequence(word: &[usize], pattern: &[usize]) -> bool {
    let m = word.len();
    if pattern.is_empty() {
        return true;
    }
    (0..m).filter(|&i| word[i] == pattern[0]).any(|start| {
        let mut k = 1;
        for step in 1..m {
            if k == pattern.len() {
                break;
            }
            if word[(start + step) % m] == pattern[k] {
                k += 1;
            }
        }
        k == pattern.len()
    })
}

struct Contact {
    body: usize,
    lo: Scalar,
    hi: Scalar,
    start: Point,
    end: Point,
}

/// Convex hull of the union of `bodies`, with the cyclic word of bodies met
/// along its boundary.
///
/// Fails when two bodies share a point of the hull boundary or three bodies
/// touch one hull edge line; in both cases the boundary has no well-defined
/// labeling.
pub fn hull_of_bodies<B: Borrow<ConvexBody>>(bodies: &[B]) -> Result<LabeledHull> {
    let bodies: Vec<&ConvexBody> = bodies.iter().map(Borrow::borrow).collect();
    if bodies.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let all: Vec<Point> = bodies
        .iter()
        .flat_map(|b| b.vertices().iter().cloned())
        .collect();
    let hull_pts = convex_hull(&all);
    let hull = ConvexBody::new("hull", hull_pts.clone()).expect("hull is strictly convex");

    if hull_pts.len() == 1 {
        if bodies.len() > 1 {
            return Err(Error::SharedBoundary {
                a: bodies[0].id().into(),
                b: bodies[1].id().into(),
            });
        }
        return Ok(LabeledHull {
            hull,
            arcs: vec![HullArc {
                body: 0,
                points: hull_pts,
            }],
            word: vec![0],
        });
    }

    let mut pieces: Vec<(usize, Vec<Point>)> = Vec::new();
    for (a, b) in hull.edges() {
        let e = b.sub(a);
        let outward = e.perp().neg();
        let level = outward.dot_point(a);
        let mut contacts: Vec<Contact> = Vec::new();
        for (k, body) in bodies.iter().enumerate() {
            if body.support(&outward) != level {
                continue;
            }
            let mut touching = body
                .vertices()
                .iter()
                .filter(|v| outward.dot_point(v) == level)
                .map(|v| (e.dot_point(v), v));
            let (t0, p0) = touching.next().expect("support is attained");
            let (mut lo, mut start, mut hi, mut end) = (t0.clone(), p0, t0, p0);
            for (t, v) in touching {
                if t < lo {
                    lo = t;
                    start = v;
                } else if t > hi {
                    hi = t;
                    end = v;
                }
            }
            contacts.push(Contact {
                body: k,
                lo,
                hi,
                start: start.clone(),
                end: end.clone(),
            });
        }
        contacts.sort_by(|x, y| x.lo.cmp(&y.lo));
        if contacts.len() >= 3 {
            return Err(Error::CommonTangent {
                bodies: contacts
                    .iter()
                    .map(|c| bodies[c.body].id().into())
                    .collect(),
                line: Line::through(a, b).expect("hull edge is nondegenerate"),
            });
        }
        if contacts.len() == 2 && contacts[0].hi >= contacts[1].lo {
            return Err(Error::SharedBoundary {
                a: bodies[contacts[0].body].id().into(),
                b: bodies[contacts[1].body].id().into(),
            });
        }
        for c in contacts {
            let mut pts = vec![c.start];
            if c.end != pts[0] {
                pts.push(c.end);
            }
            pieces.push((c.body, pts));
        }
    }

    let mut arcs: Vec<HullArc> = Vec::new();
    for (body, pts) in pieces {
        match arcs.last_mut() {
            Some(last) if last.body == body => extend_polyline(&mut last.points, pts),
            _ => arcs.push(HullArc { body, points: pts }),
        }
    }
    if arcs.len() > 1 && arcs[0].body == arcs[arcs.len() - 1].body {
        let first = arcs.remove(0);
        extend_polyline(&mut arcs.last_mut().unwrap().points, first.points);
    }
    let word = arcs.iter().map(|a| a.body).collect();
    Ok(LabeledHull { hull, arcs, word })
}

fn extend_polyline(into: &mut Vec<Point>, more: Vec<Point>) {
    for p in more {
        if into.last() != Some(&p) {
            into.push(p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn body(id: &str, pts: &[(i64, i64)]) -> ConvexBody {
        ConvexBody::new(
            id,
            pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn hull_drops_collinear_and_interior_points() {
        let pts: Vec<Point> = [(0, 0), (2, 0), (1, 0), (2, 2), (0, 2), (1, 1)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect();
        let h = convex_hull(&pts);
        let expect: Vec<Point> = [(0, 0), (2, 0), (2, 2), (0, 2)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect();
        assert_eq!(h, expect);
    }

    #[test]
    fn single_body_word() {
        let t = body("t", &[(0, 0), (3, 0), (0, 3)]);
        let h = hull_of_bodies(&[&t]).unwrap();
        assert_eq!(h.word, vec![0]);
        assert_eq!(h.hull.vertices(), t.vertices());
    }

    #[test]
    fn nested_body_is_hidden() {
        let outer = body("o", &[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let inner = body("i", &[(1, 1), (2, 1), (2, 2), (1, 2)]);
        let h = hull_of_bodies(&[outer.clone(), inner]).unwrap();
        assert_eq!(h.word, vec![0]);
        assert_eq!(h.hull.vertices(), outer.vertices());
    }

    #[test]
    fn shared_hull_vertex_is_rejected() {
        let a = body("a", &[(0, 0), (1, 0), (0, 1)]);
        let b = body("b", &[(1, 0), (2, 0), (2, 1)]);
        let c = body("c", &[(0, 5)]);
        assert!(matches!(
            hull_of_bodies(&[a, b, c]),
            Err(Error::SharedBoundary { .. }) | Err(Error::CommonTangent { .. })
        ));
    }

    #[test]
    fn three_on_an_edge_line_is_rejected() {
        let a = body("a", &[(0, 0)]);
        let b = body("b", &[(1, 0)]);
        let c = body("c", &[(2, 0)]);
        let d = body("d", &[(1, 3)]);
        assert!(matches!(
            hull_of_bodies(&[a, b, c, d]),
            Err(Error::CommonTangent { .. })
        ));
    }

    #[test]
    fn cyclic_subsequence_rotations() {
        let w = [0, 1, 2, 1];
        assert!(cyclic_subsequence(&w, &[0, 1, 2]));
        assert!(cyclic_subsequence(&w, &[0, 2, 1]));
        assert!(cyclic_subsequence(&w, &[2, 0, 1]));
        assert!(!cyclic_subsequence(&[0, 1, 2], &[0, 2, 1]));
        assert!(!cyclic_subsequence(&[0, 1], &[0, 1, 2]));
    }
}
