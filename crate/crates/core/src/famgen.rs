//! Deterministic family generators and the named fixtures.
//!
//! Generated coordinates are multiples of 1/64. Angles come from a fixed
//! integer sine table, so output does not depend on platform floating point.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convex_position::{is_case_two, tangent_rotation_order};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::geom::{ratio, ConvexBody, Line, Point};
use crate::predicates::{
    check_assumptions, is_disjoint, is_general_position, is_pairwise_disjoint,
    is_pairwise_noncrossing,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// Disjoint bodies centered near a circle, in general position.
    DisjointOnCircle,
    /// Disjoint bodies scattered in a square.
    DisjointRandom,
    /// Overlapping (possibly nested) bodies, pairwise noncrossing.
    NoncrossingNested,
    /// Disjoint bodies all meeting the x-axis.
    StabbedByLine,
    /// A base body `0` on the hull followed by members in tangent-rotation
    /// order, with no recorded tangent crossing any member.
    Case2TangentRotation,
}

impl GenKind {
    pub const ALL: [GenKind; 5] = [
        GenKind::DisjointOnCircle,
        GenKind::DisjointRandom,
        GenKind::NoncrossingNested,
        GenKind::StabbedByLine,
        GenKind::Case2TangentRotation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::DisjointOnCircle => "disjoint-on-circle",
            GenKind::DisjointRandom => "disjoint-random",
            GenKind::NoncrossingNested => "noncrossing-nested",
            GenKind::StabbedByLine => "stabbed-by-line",
            GenKind::Case2TangentRotation => "case2-tangent-rotation",
        }
    }

    pub fn from_name(name: &str) -> Result<GenKind> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator kind `{name}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub seed: u64,
    /// Number of bodies, including the base body for
    /// [`GenKind::Case2TangentRotation`].
    pub count: usize,
    pub kind: GenKind,
    /// Vertices sampled per body (1 gives points, 2 segments); the hull may
    /// drop some.
    pub vertices: usize,
    /// Typical body radius, in whole units.
    pub scale: i64,
    /// Largest ratio of a body's long to short axis.
    pub aspect: i64,
}

impl GenSpec {
    pub fn new(seed: u64, count: usize, kind: GenKind) -> GenSpec {
        GenSpec {
            seed,
            count,
            kind,
            vertices: 5,
            scale: 4,
            aspect: 3,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidArgument(what.into()));
        if self.count == 0 || self.count > 32 {
            return bad("count must be in 1..=32");
        }
        if self.vertices == 0 || self.vertices > 16 {
            return bad("vertices must be in 1..=16");
        }
        if self.scale < 1 || self.scale > 1000 {
            return bad("scale must be in 1..=1000");
        }
        if self.aspect < 1 || self.aspect > 16 {
            return bad("aspect must be in 1..=16");
        }
        if self.kind == GenKind::Case2TangentRotation && self.count > 16 {
            return bad("case2 families have at most 16 bodies");
        }
        Ok(())
    }
}

/// A generated family with the line all members meet, when the kind has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub family: Family,
    pub witness: Option<Line>,
}

/// Whole-family attempts before giving up.
pub const FAMILY_ATTEMPTS: usize = 2000;
/// Placement attempts per body within one family attempt.
const BODY_ATTEMPTS: usize = 200;

/// Units per whole coordinate.
const DEN: i64 = 64;

/// `round(4096 sin(2 pi k / 64))` for `k = 0..=16`.
const SIN_TABLE: [i64; 17] = [
    0, 401, 799, 1189, 1567, 1931, 2276, 2598, 2896, 3166, 3406, 3612, 3784, 3920, 4017, 4076, 4096,
];
const TABLE_ONE: i64 = 4096;
const DIRECTIONS: usize = 64;

/// `(cos, sin)` of direction `k` out of 64, scaled by 4096.
fn direction(k: usize) -> (i64, i64) {
    let k = k % DIRECTIONS;
    let sin = |k: usize| match k / 16 {
        0 => SIN_TABLE[k],
        1 => SIN_TABLE[32 - k],
        2 => -SIN_TABLE[k - 32],
        _ => -SIN_TABLE[64 - k],
    };
    (sin((k + 16) % DIRECTIONS), sin(k))
}

fn div_round(num: i64, den: i64) -> i64 {
    (2 * num + den).div_euclid(2 * den)
}

/// Body with center `(cx, cy)` and semi-axes `a >= b`, all in units of 1/64.
fn shape(
    rng: &mut ChaCha8Rng,
    id: String,
    center: (i64, i64),
    a: i64,
    b: i64,
    vertices: usize,
) -> Option<ConvexBody> {
    let (ct, st) = direction(rng.gen_range(0..DIRECTIONS));
    let picks = sample(rng, DIRECTIONS, vertices);
    let sq = TABLE_ONE * TABLE_ONE;
    let points: Vec<Point> = picks
        .iter()
        .map(|k| {
            let (cp, sp) = direction(k);
            let ox = div_round(a * cp * ct - b * sp * st, sq);
            let oy = div_round(a * cp * st + b * sp * ct, sq);
            Point::new(ratio(center.0 + ox, DEN), ratio(center.1 + oy, DEN))
        })
        .collect();
    ConvexBody::hull_of(id, &points).ok()
}

struct Sampler<'a> {
    spec: &'a GenSpec,
    rng: ChaCha8Rng,
}

impl Sampler<'_> {
    fn radius(&self) -> i64 {
        self.spec.scale * DEN
    }

    /// Semi-axes for a body of typical radius `r`.
    fn axes(&mut self, r: i64) -> (i64, i64) {
        let a = self.rng.gen_range(r / 2..=r).max(2);
        let aspect = self.rng.gen_range(1..=self.spec.aspect);
        (a, (a / aspect).max(2))
    }

    fn body(&mut self, id: String, center: (i64, i64), r: i64) -> Option<ConvexBody> {
        let (a, b) = self.axes(r);
        shape(&mut self.rng, id, center, a, b, self.spec.vertices)
    }

    /// Adds bodies from `draw` until `count` are placed, each disjoint from
    /// the earlier ones when `disjoint` is set.
    fn place(
        &mut self,
        count: usize,
        first_id: usize,
        disjoint: bool,
        mut draw: impl FnMut(&mut Self, usize, String) -> Option<ConvexBody>,
    ) -> Option<Vec<ConvexBody>> {
        let mut bodies: Vec<ConvexBody> = Vec::with_capacity(count);
        for k in 0..count {
            let id = (first_id + k).to_string();
            let placed = (0..BODY_ATTEMPTS).find_map(|_| {
                let b = draw(self, k, id.clone())?;
                (!disjoint || bodies.iter().all(|o| is_disjoint(o, &b))).then_some(b)
            })?;
            bodies.push(placed);
        }
        Some(bodies)
    }

    fn on_circle(&mut self) -> Option<Generated> {
        let n = self.spec.count;
        let r = self.radius();
        let big = 2 * r * (n.max(2) as i64);
        let start = self.rng.gen_range(0..DIRECTIONS);
        let spread = (DIRECTIONS / n / 4).max(1);
        let bodies = self.place(n, 1, true, |s, k, id| {
            let jitter = s.rng.gen_range(0..spread);
            let (c, si) = direction(start + k * DIRECTIONS / n + jitter);
            let center = (
                div_round(big * c, TABLE_ONE),
                div_round(big * si, TABLE_ONE),
            );
            s.body(id, center, r)
        })?;
        let family = Family::new(bodies).ok()?;
        is_general_position(&family).then_some(Generated {
            family,
            witness: None,
        })
    }

    fn scattered(&mut self, disjoint: bool) -> Option<Generated> {
        let n = self.spec.count;
        let r = self.radius();
        let root = (1..).find(|k| k * k >= n).unwrap() as i64;
        let side = if disjoint {
            2 * r * (2 + 2 * root)
        } else {
            2 * r * (1 + root)
        };
        let bodies = self.place(n, 1, disjoint, |s, _, id| {
            let center = (s.rng.gen_range(0..=side), s.rng.gen_range(0..=side));
            let size = if disjoint {
                r
            } else {
                s.rng.gen_range(r / 2..=2 * r)
            };
            s.body(id, center, size)
        })?;
        let family = Family::new(bodies).ok()?;
        if !disjoint && !is_pairwise_noncrossing(&family).ok()? {
            return None;
        }
        Some(Generated {
            family,
            witness: None,
        })
    }

    fn stabbed(&mut self) -> Option<Generated> {
        let n = self.spec.count;
        let r = self.radius();
        let length = 3 * r * n as i64;
        let axis = Line::from_coefficients(0.into(), 1.into(), 0.into()).expect("x-axis");
        let bodies = self.place(n, 1, true, |s, _, id| {
            let center = (s.rng.gen_range(0..=length), s.rng.gen_range(-r / 2..=r / 2));
            s.body(id, center, r).filter(|b| axis.meets(b))
        })?;
        Some(Generated {
            family: Family::new(bodies).ok()?,
            witness: Some(axis),
        })
    }

    fn case_two(&mut self) -> Option<Generated> {
        let n = self.spec.count;
        let r = self.radius();
        let base = self.body("0".into(), (0, 0), r)?;
        let members = self.place(n - 1, 1, true, |s, _, id| {
            // upper half plane, away from the base
            let (c, si) = direction(s.rng.gen_range(2..DIRECTIONS / 2 - 1));
            let dist = s.rng.gen_range(4 * r..=4 * r + 6 * r * n as i64);
            let center = (
                div_round(dist * c, TABLE_ONE),
                div_round(dist * si, TABLE_ONE),
            );
            s.body(id, center, r / 2).filter(|b| is_disjoint(b, &base))
        })?;
        let members = Family::new(members).ok()?;
        let rot = tangent_rotation_order(&base, &members).ok()?;
        if !is_case_two(&members, &rot) {
            return None;
        }
        let mut bodies = vec![base];
        bodies.extend(rot.order.iter().map(|&i| members[i].clone()));
        Some(Generated {
            family: Family::new(bodies).ok()?,
            witness: None,
        })
    }
}

/// Deterministic in `spec`; every returned family is re-validated against
/// the predicates of its kind and passes [`check_assumptions`].
pub fn generate_detailed(spec: &GenSpec) -> Result<Generated> {
    spec.validate()?;
    let mut sampler = Sampler {
        spec,
        rng: ChaCha8Rng::seed_from_u64(spec.seed),
    };
    for _ in 0..FAMILY_ATTEMPTS {
        let candidate = match spec.kind {
            GenKind::DisjointOnCircle => sampler.on_circle(),
            GenKind::DisjointRandom => sampler.scattered(true),
            GenKind::NoncrossingNested => sampler.scattered(false),
            GenKind::StabbedByLine => sampler.stabbed(),
            GenKind::Case2TangentRotation => sampler.case_two(),
        };
        let Some(g) = candidate else { continue };
        if check_assumptions(&g.family).is_empty() && valid_for(spec.kind, &g) {
            return Ok(g);
        }
    }
    Err(Error::GenerationBudget {
        attempts: FAMILY_ATTEMPTS,
        what: format!("{} family of {}", spec.kind.name(), spec.count),
    })
}

fn valid_for(kind: GenKind, g: &Generated) -> bool {
    let f = &g.family;
    match kind {
        GenKind::DisjointOnCircle => is_pairwise_disjoint(f) && is_general_position(f),
        GenKind::DisjointRandom | GenKind::Case2TangentRotation => is_pairwise_disjoint(f),
        GenKind::NoncrossingNested => is_pairwise_noncrossing(f).unwrap_or(false),
        GenKind::StabbedByLine => {
            is_pairwise_disjoint(f)
                && g.witness
                    .as_ref()
                    .is_some_and(|l| f.iter().all(|b| l.meets(b)))
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Family> {
    generate_detailed(spec).map(|g| g.family)
}

pub const FIXTURE_NAMES: [&str; 6] = [
    "tri3",
    "bar",
    "hidden4",
    "nested",
    "crossing-bar",
    "stabbed7",
];

fn poly(id: &str, pts: &[(i64, i64)]) -> ConvexBody {
    ConvexBody::new(
        id,
        pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
    )
    .expect("fixture bodies are valid")
}

/// The named reference families; coordinates are frozen.
pub fn fixture(name: &str) -> Result<Family> {
    let bodies = match name {
        "tri3" => vec![
            poly("1", &[(0, 0), (1, 0), (0, 1)]),
            poly("2", &[(4, 0), (5, 1), (4, 1)]),
            poly("3", &[(2, 3), (3, 4), (2, 4)]),
        ],
        "bar" => vec![
            poly("1", &[(0, -1), (1, 0), (0, 1)]),
            poly("2", &[(2, -5), (3, -5), (3, 5), (2, 5)]),
            poly("3", &[(5, 0), (6, -1), (6, 1)]),
        ],
        // every triple is in convex position, all four are not
        "hidden4" => vec![
            poly("1", &[(0, 0), (40, 0)]),
            poly("2", &[(120, 0), (100, 40)]),
            poly("3", &[(60, 120), (40, 80)]),
            poly("4", &[(60, 36), (69, 53), (52, 54)]),
        ],
        "nested" => vec![
            poly("1", &[(0, 0), (4, 0), (4, 4), (0, 4)]),
            poly("2", &[(1, 1), (2, 1), (2, 2), (1, 2)]),
        ],
        "crossing-bar" => vec![
            poly("1", &[(0, 0), (4, 0), (4, 4), (0, 4)]),
            poly("2", &[(-1, 1), (5, 1), (5, 2), (-1, 2)]),
        ],
        // seven disjoint triangles, each meeting the x-axis
        "stabbed7" => {
            let h1 = [7, 7, 3, 6, 8, 6, 8];
            let h2 = [5, 3, 8, 5, 3, 7, 7];
            let h3 = [4, 1, 4, 8, 7, 9, 9];
            (0..7)
                .map(|k| {
                    let x = 3 * k as i64;
                    poly(
                        &(k + 1).to_string(),
                        &[(x, -h1[k]), (x + 1, h2[k]), (x - 1, h3[k])],
                    )
                })
                .collect()
        }
        _ => return Err(Error::UnknownFixture(name.into())),
    };
    Family::new(bodies)
}
