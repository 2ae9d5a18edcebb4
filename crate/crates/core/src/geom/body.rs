use std::fmt;

use num::{One, Signed, Zero};

use super::{convex_hull, orient3, Direction, Point, Scalar, Sign, Vector};
use crate::error::{Error, Result};

/// A convex polygon with exact vertices in counterclockwise order.
///
/// One vertex is a point body and two vertices a segment body. With three or
/// more vertices the polygon is strictly convex: every vertex lies strictly to
/// the left of every edge it is not an endpoint of.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexBody {
    id: String,
    vertices: Vec<Point>,
}

impl ConvexBody {
    pub fn new(id: impl Into<String>, vertices: Vec<Point>) -> Result<Self> {
        let id = id.into();
        let invalid = |reason: String| Error::InvalidBody {
            id: id.clone(),
            reason,
        };
        if vertices.is_empty() {
            return Err(invalid("no vertices".into()));
        }
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i] == vertices[j] {
                    return Err(invalid(format!("repeated vertex {}", vertices[i])));
                }
            }
        }
        let n = vertices.len();
        if n >= 3 {
            for i in 0..n {
                let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
                for (k, v) in vertices.iter().enumerate() {
                    if k != i && k != (i + 1) % n && orient3(a, b, v) != Sign::Positive {
                        return Err(invalid(format!(
                            "vertex {v} is not strictly left of edge {a} -> {b}"
                        )));
                    }
                }
            }
        }
        Ok(ConvexBody { id, vertices })
    }

    /// Convex hull of arbitrary points; collinear and repeated points are dropped.
    pub fn hull_of(id: impl Into<String>, points: &[Point]) -> Result<Self> {
        ConvexBody::new(id, convex_hull(points))
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn with_id(&self, id: impl Into<String>) -> ConvexBody {
        ConvexBody {
            id: id.into(),
            vertices: self.vertices.clone(),
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Boundary edges as a closed walk. A segment is walked there and back so
    /// that removing an interior piece of it splits the walk in two, as it
    /// splits the segment. A point body has no edges.
    pub fn edges(&self) -> Vec<(&Point, &Point)> {
        let v = &self.vertices;
        match v.len() {
            1 => Vec::new(),
            2 => vec![(&v[0], &v[1]), (&v[1], &v[0])],
            n => (0..n).map(|i| (&v[i], &v[(i + 1) % n])).collect(),
        }
    }

    /// Maximum of `normal · x` over the body.
    pub fn support(&self, normal: &Vector) -> Scalar {
        self.vertices
            .iter()
            .map(|v| normal.dot_point(v))
            .max()
            .expect("body has a vertex")
    }

    /// `[min, max]` of `v · x` over the body; attained at vertices.
    pub fn projection_of(&self, v: &Vector) -> (Scalar, Scalar) {
        let mut values = self.vertices.iter().map(|p| v.dot_point(p));
        let first = values.next().expect("body has a vertex");
        values.fold((first.clone(), first), |(lo, hi), x| {
            if x < lo {
                (x, hi)
            } else if x > hi {
                (lo, x)
            } else {
                (lo, hi)
            }
        })
    }

    pub fn projection_interval(&self, d: &Direction) -> (Scalar, Scalar) {
        self.projection_of(&d.to_vector())
    }

    /// Closed containment.
    pub fn contains(&self, p: &Point) -> bool {
        let v = &self.vertices;
        match v.len() {
            1 => &v[0] == p,
            2 => on_segment(&v[0], &v[1], p),
            n => (0..n).all(|i| orient3(&v[i], &v[(i + 1) % n], p) != Sign::Negative),
        }
    }

    pub fn contains_body(&self, other: &ConvexBody) -> bool {
        other.vertices.iter().all(|p| self.contains(p))
    }

    /// Vertex average; lies in the body.
    pub fn centroid(&self) -> Point {
        let n = Scalar::from_integer(self.vertices.len().into());
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((Scalar::zero(), Scalar::zero()), |(sx, sy), p| {
                (sx + &p.x, sy + &p.y)
            });
        Point::new(sx / &n, sy / n)
    }

    /// Parameter interval `[t0, t1] ⊆ [0, 1]` of the points of segment `p q`
    /// that lie in the body, or `None` if they miss it. `p` and `q` must differ.
    pub fn clip_segment(&self, p: &Point, q: &Point) -> Option<(Scalar, Scalar)> {
        let v = &self.vertices;
        let d = q.sub(p);
        match v.len() {
            1 => {
                if on_segment(p, q, &v[0]) {
                    let t = param_along(p, &d, &v[0]);
                    Some((t.clone(), t))
                } else {
                    None
                }
            }
            2 => clip_against_segment(p, q, &v[0], &v[1]),
            n => {
                let mut lo = Scalar::zero();
                let mut hi = Scalar::one();
                for i in 0..n {
                    let (a, b) = (&v[i], &v[(i + 1) % n]);
                    let e = b.sub(a);
                    // f(t) = cross(e, p + t d - a) >= 0
                    let f0 = e.cross(&p.sub(a));
                    let slope = e.cross(&d);
                    if slope.is_zero() {
                        if f0.is_negative() {
                            return None;
                        }
                    } else {
                        let t = -&f0 / &slope;
                        if slope.is_positive() {
                            if t > lo {
                                lo = t;
                            }
                        } else if t < hi {
                            hi = t;
                        }
                    }
                    if lo > hi {
                        return None;
                    }
                }
                Some((lo, hi))
            }
        }
    }
}

impl fmt::Display for ConvexBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.id)?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient3(a, b, p) == Sign::Zero
        && a.x.clone().min(b.x.clone()) <= p.x
        && p.x <= a.x.clone().max(b.x.clone())
        && a.y.clone().min(b.y.clone()) <= p.y
        && p.y <= a.y.clone().max(b.y.clone())
}

fn param_along(p: &Point, d: &Vector, x: &Point) -> Scalar {
    d.dot(&x.sub(p)) / d.dot(d)
}

fn clip_against_segment(p: &Point, q: &Point, a: &Point, b: &Point) -> Option<(Scalar, Scalar)> {
    let d = q.sub(p);
    let e = b.sub(a);
    let denom = d.cross(&e);
    if denom.is_zero() {
        if orient3(p, q, a) != Sign::Zero {
            return None;
        }
        let ta = param_along(p, &d, a);
        let tb = param_along(p, &d, b);
        let (lo, hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
        let lo = lo.max(Scalar::zero());
        let hi = hi.min(Scalar::one());
        return (lo <= hi).then_some((lo, hi));
    }
    // p + t d = a + s e
    let ap = a.sub(p);
    let t = ap.cross(&e) / &denom;
    let s = ap.cross(&d) / &denom;
    let unit = Scalar::zero()..=Scalar::one();
    (unit.contains(&t) && unit.contains(&s)).then(|| (t.clone(), t))
}

/// Normals that suffice to decide separability of two convex polygons: edge
/// normals of both, plus each vertex-pair difference and its perpendicular.
fn separation_candidates(a: &ConvexBody, b: &ConvexBody) -> Vec<Vector> {
    let mut out = vec![Vector::from_ints(1, 0), Vector::from_ints(0, 1)];
    for body in [a, b] {
        for (p, q) in body.edges() {
            out.push(q.sub(p).perp());
        }
    }
    for u in a.vertices() {
        for w in b.vertices() {
            let d = w.sub(u);
            if !d.is_zero() {
                out.push(d.perp());
                out.push(d);
            }
        }
    }
    out
}

fn separable_by(a: &ConvexBody, b: &ConvexBody, strict: bool) -> bool {
    separation_candidates(a, b).iter().any(|n| {
        let (alo, ahi) = a.projection_of(n);
        let (blo, bhi) = b.projection_of(n);
        if strict {
            ahi < blo || bhi < alo
        } else {
            ahi <= blo || bhi <= alo
        }
    })
}

/// True iff some line has `a` strictly on one side and `b` strictly on the
/// other, i.e. the closed bodies are disjoint.
pub fn strictly_separable(a: &ConvexBody, b: &ConvexBody) -> bool {
    separable_by(a, b, true)
}

/// True iff some line has `a` and `b` in opposite closed half-planes.
pub fn weakly_separable(a: &ConvexBody, b: &ConvexBody) -> bool {
    separable_by(a, b, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, ratio};

    fn body(id: &str, pts: &[(i64, i64)]) -> ConvexBody {
        ConvexBody::new(
            id,
            pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rejects_clockwise_and_collinear() {
        let cw = vec![
            Point::from_ints(0, 0),
            Point::from_ints(0, 1),
            Point::from_ints(1, 0),
        ];
        assert!(ConvexBody::new("x", cw).is_err());
        let flat = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(2, 0),
        ];
        assert!(ConvexBody::new("x", flat).is_err());
        assert!(ConvexBody::new("x", vec![]).is_err());
        let dup = vec![Point::from_ints(0, 0), Point::from_ints(0, 0)];
        assert!(ConvexBody::new("x", dup).is_err());
    }

    #[test]
    fn projection_examples() {
        let sq = body("s", &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(
            sq.projection_interval(&Direction::from_ints(1, 0).unwrap()),
            (int(0), int(1))
        );
        let pt = body("p", &[(3, 5)]);
        assert_eq!(
            pt.projection_interval(&Direction::from_ints(0, 1).unwrap()),
            (int(5), int(5))
        );
        let tri = body("t", &[(0, 0), (2, 0), (0, 2)]);
        assert_eq!(
            tri.projection_interval(&Direction::from_ints(1, 1).unwrap()),
            (int(0), int(2))
        );
    }

    #[test]
    fn clip_segment_through_square() {
        let sq = body("s", &[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let got = sq.clip_segment(&Point::from_ints(-4, 2), &Point::from_ints(8, 2));
        assert_eq!(got, Some((ratio(1, 3), ratio(2, 3))));
        assert_eq!(
            sq.clip_segment(&Point::from_ints(5, 0), &Point::from_ints(5, 4)),
            None
        );
        let seg = body("g", &[(0, -1), (0, 1)]);
        assert_eq!(
            seg.clip_segment(&Point::from_ints(-1, 0), &Point::from_ints(1, 0)),
            Some((ratio(1, 2), ratio(1, 2)))
        );
        let collinear = body("c", &[(1, 0), (3, 0)]);
        assert_eq!(
            collinear.clip_segment(&Point::from_ints(0, 0), &Point::from_ints(2, 0)),
            Some((ratio(1, 2), int(1)))
        );
    }

    #[test]
    fn separation() {
        let a = body("a", &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let b = body("b", &[(1, 1), (2, 1), (2, 2), (1, 2)]);
        assert!(!strictly_separable(&a, &b));
        assert!(weakly_separable(&a, &b));
        let p = body("p", &[(5, 5)]);
        let q = body("q", &[(6, 5)]);
        assert!(strictly_separable(&p, &q));
        let h = body("h", &[(0, 0), (4, 0)]);
        let v = body("v", &[(2, -1), (2, 1)]);
        assert!(!weakly_separable(&h, &v));
    }
}
