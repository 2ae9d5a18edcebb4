//! Combinatorial predicates on bodies and families: disjointness,
//! noncrossing, triple orientation, disconnectability, general position,
//! the configuration assumptions and line transversals.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num::integer::Integer;
use num::{BigInt, One, Signed};

use crate::convex_position::in_convex_position_direct;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::geom::{
    boundary_arc_components, convex_hull, hull_of_bodies, strictly_separable, weakly_separable,
    ConvexBody, Line, Point, Scalar, Sign, Vector,
};

/// Which orientations an ordered triple of bodies admits; any of the four
/// subsets of `{+, -}` can occur.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OrientationSet {
    pub ccw: bool,
    pub cw: bool,
}

impl OrientationSet {
    pub const EMPTY: OrientationSet = OrientationSet {
        ccw: false,
        cw: false,
    };
    pub const CCW: OrientationSet = OrientationSet {
        ccw: true,
        cw: false,
    };
    pub const CW: OrientationSet = OrientationSet {
        ccw: false,
        cw: true,
    };
    pub const BOTH: OrientationSet = OrientationSet {
        ccw: true,
        cw: true,
    };

    pub fn only(sign: Sign) -> OrientationSet {
        match sign {
            Sign::Positive => Self::CCW,
            Sign::Negative => Self::CW,
            Sign::Zero => Self::EMPTY,
        }
    }

    pub fn contains(self, sign: Sign) -> bool {
        match sign {
            Sign::Positive => self.ccw,
            Sign::Negative => self.cw,
            Sign::Zero => false,
        }
    }

    pub fn is_empty(self) -> bool {
        !self.ccw && !self.cw
    }

    pub fn is_both(self) -> bool {
        self.ccw && self.cw
    }

    /// The orientation when exactly one is present.
    pub fn unique(self) -> Option<Sign> {
        match (self.ccw, self.cw) {
            (true, false) => Some(Sign::Positive),
            (false, true) => Some(Sign::Negative),
            _ => None,
        }
    }

    /// The set for the triple under an odd permutation.
    pub fn reversed(self) -> OrientationSet {
        OrientationSet {
            ccw: self.cw,
            cw: self.ccw,
        }
    }

    pub fn intersection(self, other: OrientationSet) -> OrientationSet {
        OrientationSet {
            ccw: self.ccw && other.ccw,
            cw: self.cw && other.cw,
        }
    }

    pub fn signs(self) -> Vec<Sign> {
        let mut out = Vec::new();
        if self.ccw {
            out.push(Sign::Positive);
        }
        if self.cw {
            out.push(Sign::Negative);
        }
        out
    }
}

impl fmt::Display for OrientationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.signs().iter().map(|s| s.symbol()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Orientations of the ordered triple `(a1, a2, a3)`.
///
/// Counterclockwise is admitted iff the cyclic boundary word of the triple's
/// hull contains `(1, 2, 3)` as a cyclic subsequence, clockwise iff it
/// contains `(1, 3, 2)`. A body missing from the hull boundary leaves the set
/// empty.
pub fn orientations(a1: &ConvexBody, a2: &ConvexBody, a3: &ConvexBody) -> Result<OrientationSet> {
    let hull = hull_of_bodies(&[a1, a2, a3])?;
    Ok(OrientationSet {
        ccw: hull.has_cyclic_subsequence(&[0, 1, 2]),
        cw: hull.has_cyclic_subsequence(&[0, 2, 1]),
    })
}

/// Closed bodies are disjoint.
pub fn is_disjoint(a: &ConvexBody, b: &ConvexBody) -> bool {
    strictly_separable(a, b)
}

/// Interval of `v · x` over the vertices of `body` that attain `level`.
fn contact_interval(body: &ConvexBody, normal: &Vector, level: &Scalar) -> (Scalar, Scalar) {
    let along = normal.perp();
    let mut ts = body
        .vertices()
        .iter()
        .filter(|v| &normal.dot_point(v) == level)
        .map(|v| along.dot_point(v));
    let first = ts.next().expect("level is attained");
    ts.fold((first.clone(), first), |(lo, hi), t| {
        (lo.min(t.clone()), hi.max(t))
    })
}

/// True iff the bodies touch without properly overlapping: either they meet
/// and a line weakly separates them, or some line supports both from the same
/// side at a common boundary point.
pub fn are_tangent(a: &ConvexBody, b: &ConvexBody) -> bool {
    if strictly_separable(a, b) {
        return false;
    }
    if weakly_separable(a, b) {
        return true;
    }
    let mut normals: Vec<Vector> = Vec::new();
    for body in [a, b] {
        for (p, q) in body.edges() {
            let n = q.sub(p).perp();
            normals.push(n.neg());
            normals.push(n);
        }
    }
    for u in a.vertices() {
        for w in b.vertices() {
            let d = w.sub(u);
            if !d.is_zero() {
                normals.push(d.perp());
                normals.push(d.perp().neg());
            }
        }
    }
    normals.iter().any(|n| {
        let level = a.support(n);
        if b.support(n) != level {
            return false;
        }
        let (alo, ahi) = contact_interval(a, n, &level);
        let (blo, bhi) = contact_interval(b, n, &level);
        alo <= bhi && blo <= ahi
    })
}

/// Both `A \ B` and `B \ A` are connected; an empty difference counts as
/// connected.
pub fn is_noncrossing(a: &ConvexBody, b: &ConvexBody) -> Result<bool> {
    if are_tangent(a, b) {
        return Err(Error::SharedBoundary {
            a: a.id().into(),
            b: b.id().into(),
        });
    }
    let difference_connected = |x: &ConvexBody, y: &ConvexBody| {
        y.contains_body(x) || !boundary_arc_components(x, y).is_split()
    };
    Ok(difference_connected(a, b) && difference_connected(b, a))
}

/// Every pair of members is noncrossing.
pub fn is_pairwise_noncrossing(f: &Family) -> Result<bool> {
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if !is_noncrossing(&f[i], &f[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_pairwise_disjoint(f: &Family) -> bool {
    (0..f.len()).all(|i| (i + 1..f.len()).all(|j| is_disjoint(&f[i], &f[j])))
}

pub(crate) fn family_hull(f: &[ConvexBody]) -> ConvexBody {
    let pts: Vec<Point> = f
        .iter()
        .flat_map(|b| b.vertices().iter().cloned())
        .collect();
    ConvexBody::new("hull", convex_hull(&pts)).expect("hull is strictly convex")
}

/// `conv(F) \ F[x]` is disconnected.
pub fn disconnects(x: usize, f: &Family) -> bool {
    boundary_arc_components(&family_hull(f), &f[x]).is_split()
}

pub fn is_disconnectable(f: &Family) -> bool {
    (0..f.len()).any(|x| disconnects(x, f))
}

/// Every 3-subfamily is in convex position.
pub fn is_general_position(f: &Family) -> bool {
    triples(f.len()).all(|[i, j, k]| in_convex_position_direct(&f.subfamily(&[i, j, k])))
}

/// Index triples `i < j < k` in lexicographic order.
pub fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k])))
}

/// A breach of the standing assumptions: no two bodies tangent, no three
/// bodies sharing a tangent line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Tangency { a: usize, b: usize },
    CommonTangent { bodies: [usize; 3], line: Line },
}

/// All violations of the configuration assumptions, pairs first.
pub fn check_assumptions(f: &Family) -> Vec<Violation> {
    let mut out = Vec::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if are_tangent(&f[i], &f[j]) {
                out.push(Violation::Tangency { a: i, b: j });
            }
        }
    }
    let mut seen_lines: HashSet<Line> = HashSet::new();
    let mut seen_triples: HashSet<[usize; 3]> = HashSet::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            for u in f[i].vertices() {
                for w in f[j].vertices() {
                    let Some(line) = Line::through(u, w) else {
                        continue;
                    };
                    if !seen_lines.insert(line.clone()) {
                        continue;
                    }
                    let normal = line.normal();
                    let c = line.offset();
                    let touching: Vec<usize> = (0..f.len())
                        .filter(|&k| {
                            let (lo, hi) = f[k].projection_of(&normal);
                            lo == c || hi == c
                        })
                        .collect();
                    if touching.len() >= 3 {
                        let t = [touching[0], touching[1], touching[2]];
                        if seen_triples.insert(t) {
                            out.push(Violation::CommonTangent { bodies: t, line });
                        }
                    }
                }
            }
        }
    }
    out
}

/// A line meeting every listed member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalCertificate {
    pub line: Line,
    pub members: Vec<usize>,
}

impl TransversalCertificate {
    /// Exact recheck: distinct valid members, each met by the line.
    pub fn verify(&self, f: &Family) -> bool {
        let mut seen = HashSet::new();
        self.members
            .iter()
            .all(|&i| i < f.len() && seen.insert(i) && self.line.meets(&f[i]))
    }
}

/// Candidate normals for line transversals: every direction at which the
/// feasibility of some subfamily can change (perpendiculars of vertex pairs
/// from distinct bodies), plus one representative strictly inside each open
/// angular interval between consecutive critical directions.
pub fn transversal_normals(f: &[ConvexBody]) -> Vec<Vector> {
    let mut critical: HashSet<crate::geom::Direction> = HashSet::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            for u in f[i].vertices() {
                for w in f[j].vertices() {
                    if let Some(d) = crate::geom::Direction::from_vector(&w.sub(u).perp()) {
                        critical.insert(d);
                    }
                }
            }
        }
    }
    let mut sorted: Vec<Vector> = critical.iter().map(|d| d.to_vector()).collect();
    // All lie in the half-plane x > 0 or (x = 0, y > 0), where cross order is total.
    sorted.sort_by(|a, b| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
    let mut out = sorted.clone();
    match sorted.len() {
        0 => {
            out.push(Vector::from_ints(0, 1));
            out.push(Vector::from_ints(1, 0));
        }
        1 => out.push(sorted[0].perp()),
        m => {
            for k in 0..m - 1 {
                out.push(sorted[k].add(&sorted[k + 1]));
            }
            out.push(sorted[m - 1].add(&sorted[0].neg()));
        }
    }
    out
}

/// Integer copy of the family's vertices, all scaled by one common factor.
struct ScaledFamily {
    scale: BigInt,
    bodies: Vec<Vec<(BigInt, BigInt)>>,
}

impl ScaledFamily {
    fn new(f: &[ConvexBody]) -> Self {
        let scale = f
            .iter()
            .flat_map(|b| b.vertices())
            .fold(BigInt::one(), |acc, p| {
                acc.lcm(p.x.denom()).lcm(p.y.denom())
            });
        let to_int = |v: &Scalar| v.numer() * (&scale / v.denom());
        let bodies = f
            .iter()
            .map(|b| {
                b.vertices()
                    .iter()
                    .map(|p| (to_int(&p.x), to_int(&p.y)))
                    .collect()
            })
            .collect();
        ScaledFamily { scale, bodies }
    }

    /// `[min, max]` of `n · x` per body, for an integer normal `n`.
    fn intervals(&self, n: &(BigInt, BigInt)) -> Vec<(BigInt, BigInt)> {
        self.bodies
            .iter()
            .map(|verts| {
                let mut vals = verts.iter().map(|(x, y)| &n.0 * x + &n.1 * y);
                let first = vals.next().expect("body has a vertex");
                vals.fold((first.clone(), first), |(lo, hi), v| {
                    (lo.min(v.clone()), hi.max(v))
                })
            })
            .collect()
    }
}

/// Deepest point of a family of closed intervals and how many contain it.
fn deepest(intervals: &[(BigInt, BigInt)]) -> (usize, BigInt) {
    let mut events: Vec<(&BigInt, i32)> = Vec::with_capacity(2 * intervals.len());
    for (lo, hi) in intervals {
        events.push((lo, 0));
        events.push((hi, 1));
    }
    // starts before ends at equal coordinates: the intervals are closed
    events.sort();
    let mut depth = 0usize;
    let mut best = (0usize, intervals[0].0.clone());
    for (x, kind) in events {
        if kind == 0 {
            depth += 1;
            if depth > best.0 {
                best = (depth, x.clone());
            }
        } else {
            depth -= 1;
        }
    }
    best
}

/// A line meeting as many members as possible, over the critical-direction
/// grid of [`transversal_normals`]. `None` for an empty family.
pub fn best_transversal(f: &Family) -> Option<TransversalCertificate> {
    best_transversal_with(f, f.len())
}

fn best_transversal_with(f: &Family, stop_at: usize) -> Option<TransversalCertificate> {
    if f.is_empty() {
        return None;
    }
    let scaled = ScaledFamily::new(f);
    let mut best: Option<(usize, Vector, BigInt)> = None;
    for normal in transversal_normals(f) {
        let n = (normal.x.numer().clone(), normal.y.numer().clone());
        debug_assert!(normal.x.is_integer() && normal.y.is_integer());
        let intervals = scaled.intervals(&n);
        let (count, at) = deepest(&intervals);
        if best.as_ref().is_none_or(|b| count > b.0) {
            best = Some((count, normal, at));
            if count >= stop_at {
                break;
            }
        }
    }
    let (_, normal, at) = best?;
    let offset = Scalar::new(at, scaled.scale.clone());
    let line = Line::with_normal(&normal, &offset).expect("normal is nonzero");
    let members = (0..f.len()).filter(|&i| line.meets(&f[i])).collect();
    Some(TransversalCertificate { line, members })
}

/// A line meeting every member, if one exists.
pub fn has_transversal(f: &Family) -> Option<TransversalCertificate> {
    best_transversal_with(f, f.len()).filter(|c| c.members.len() == f.len())
}

/// Orientation sets of every ordered triple of a family, computed once.
#[derive(Clone, Debug)]
pub struct OrientationTable {
    n: usize,
    sets: Vec<OrientationSet>,
}

impl OrientationTable {
    pub fn new(f: &Family) -> Result<Self> {
        let n = f.len();
        let mut sets = vec![OrientationSet::EMPTY; n * n * n];
        for [i, j, k] in triples(n) {
            let s = orientations(&f[i], &f[j], &f[k])?;
            let r = s.reversed();
            for (p, set) in [
                ([i, j, k], s),
                ([j, k, i], s),
                ([k, i, j], s),
                ([j, i, k], r),
                ([i, k, j], r),
                ([k, j, i], r),
            ] {
                sets[(p[0] * n + p[1]) * n + p[2]] = set;
            }
        }
        Ok(OrientationTable { n, sets })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Orientation set of the ordered triple of distinct indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> OrientationSet {
        self.sets[(i * self.n + j) * self.n + k]
    }
}
