use super::{orient3, weakly_separable, ConvexBody, Direction, Line, Point, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TangentKind {
    /// Both bodies on the same side of the line.
    Outer,
    /// The line separates the bodies.
    Inner,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommonTangent {
    pub line: Line,
    pub kind: TangentKind,
}

impl CommonTangent {
    pub fn direction(&self) -> Direction {
        self.line.direction()
    }
}

/// Which closed sides of the oriented line `p -> q` hold the whole body.
fn sides(p: &Point, q: &Point, body: &ConvexBody) -> (bool, bool) {
    let mut left = true;
    let mut right = true;
    for v in body.vertices() {
        match orient3(p, q, v) {
            Sign::Positive => right = false,
            Sign::Negative => left = false,
            Sign::Zero => {}
        }
    }
    (left, right)
}

/// All distinct lines supporting both bodies, each through a vertex of `a`
/// and a vertex of `b`, in enumeration order of the vertex pairs.
pub fn common_tangents(a: &ConvexBody, b: &ConvexBody) -> Result<Vec<CommonTangent>> {
    if !weakly_separable(a, b) {
        return Err(Error::InteriorOverlap {
            a: a.id().into(),
            b: b.id().into(),
        });
    }
    let mut out: Vec<CommonTangent> = Vec::new();
    for u in a.vertices() {
        for w in b.vertices() {
            if u == w {
                continue;
            }
            let (al, ar) = sides(u, w, a);
            let (bl, br) = sides(u, w, b);
            if !(al || ar) || !(bl || br) {
                continue;
            }
            let kind = if (al && bl) || (ar && br) {
                TangentKind::Outer
            } else {
                TangentKind::Inner
            };
            let line = Line::through(u, w).expect("distinct points");
            if !out.iter().any(|t| t.line == line) {
                out.push(CommonTangent { line, kind });
            }
        }
    }
    Ok(out)
}

/// Directions of [`common_tangents`], one entry per tangent line.
pub fn common_tangent_directions(a: &ConvexBody, b: &ConvexBody) -> Result<Vec<Direction>> {
    Ok(common_tangents(a, b)?
        .iter()
        .map(CommonTangent::direction)
        .collect())
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
    fn two_points_have_one_tangent() {
        let p = body("p", &[(0, 0)]);
        let q = body("q", &[(3, 1)]);
        assert_eq!(
            common_tangent_directions(&p, &q).unwrap(),
            vec![Direction::from_ints(3, 1).unwrap()]
        );
    }

    #[test]
    fn two_squares_have_four_tangents() {
        // unit squares centered at (0, 0) and (10, 0), doubled to stay integral
        let a = body("a", &[(-1, -1), (1, -1), (1, 1), (-1, 1)]);
        let b = body("b", &[(19, -1), (21, -1), (21, 1), (19, 1)]);
        let ts = common_tangents(&a, &b).unwrap();
        assert_eq!(ts.len(), 4);
        let horizontal = Direction::from_ints(1, 0).unwrap();
        assert_eq!(ts.iter().filter(|t| t.direction() == horizontal).count(), 2);
        assert_eq!(
            ts.iter().filter(|t| t.kind == TangentKind::Outer).count(),
            2
        );
    }

    #[test]
    fn overlapping_bodies_are_rejected() {
        let a = body("a", &[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let b = body("b", &[(1, 1), (3, 1), (3, 3), (1, 3)]);
        assert!(matches!(
            common_tangents(&a, &b),
            Err(Error::InteriorOverlap { .. })
        ));
    }
}
