//! Exact rational primitives: scalars, points, vectors, directions and lines.
//!
//! Every predicate in the crate bottoms out in [`orient3`] or a dot product
//! over [`Scalar`], so no sign is ever decided by rounding.

mod arcs;
mod body;
mod hull;
mod tangent;

pub use arcs::{boundary_arc_components, ArcComponents};
pub use body::{strictly_separable, weakly_separable, ConvexBody};
pub use hull::{convex_hull, hull_of_bodies, HullArc, LabeledHull};
pub use tangent::{common_tangent_directions, common_tangents, CommonTangent, TangentKind};

use std::cmp::Ordering;
use std::fmt;

use num::bigint::Sign as BigSign;
use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational. Always reduced with a positive denominator.
pub type Scalar = BigRational;

/// Integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced scalar. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Sign of an orientation determinant or any other exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: &Scalar) -> Sign {
        if value.is_positive() {
            Sign::Positive
        } else if value.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn to_vector(&self) -> Vector {
        Vector::new(self.x.clone(), self.y.clone())
    }

    pub fn sub(&self, other: &Point) -> Vector {
        Vector::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn offset(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.x, &self.y + &v.y)
    }

    /// Point at parameter `t` on the segment from `self` to `other`.
    pub fn lerp(&self, other: &Point, t: &Scalar) -> Point {
        self.offset(&other.sub(self).scale(t))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Free vector; unlike [`Direction`] it keeps magnitude and orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    pub x: Scalar,
    pub y: Scalar,
}

impl Vector {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Vector { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vector::new(int(x), int(y))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        products(&self.x, &other.x, &self.y, &other.y, false)
    }

    pub fn dot_point(&self, p: &Point) -> Scalar {
        products(&self.x, &p.x, &self.y, &p.y, false)
    }

    pub fn cross(&self, other: &Vector) -> Scalar {
        products(&self.x, &other.y, &self.y, &other.x, true)
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Vector {
        Vector::new(-self.y.clone(), self.x.clone())
    }

    pub fn neg(&self) -> Vector {
        Vector::new(-self.x.clone(), -self.y.clone())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, k: &Scalar) -> Vector {
        Vector::new(&self.x * k, &self.y * k)
    }
}

/// `a b + c d`, or `a b - c d` when `minus` is set, in machine integers when
/// every numerator and denominator is below 2^31.
fn products(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar, minus: bool) -> Scalar {
    const BOUND: i128 = 1 << 31;
    let small = |v: &Scalar| {
        let n = v.numer().to_i64()? as i128;
        let d = v.denom().to_i64()? as i128;
        (n.abs() < BOUND && d < BOUND).then_some((n, d))
    };
    if let (Some(a), Some(b), Some(c), Some(d)) = (small(a), small(b), small(c), small(d)) {
        let (n1, d1) = (a.0 * b.0, a.1 * b.1);
        let (n2, d2) = (c.0 * d.0, c.1 * d.1);
        let n2 = if minus { -n2 } else { n2 };
        let g = d1.gcd(&d2);
        let num = n1 * (d2 / g) + n2 * (d1 / g);
        let den = d1 / g * d2;
        let h = num.gcd(&den);
        return Scalar::new_raw(BigInt::from(num / h), BigInt::from(den / h));
    }
    if minus {
        a * b - c * d
    } else {
        a * b + c * d
    }
}

/// Sign of the determinant `|q - p, r - p|`; positive means counterclockwise.
pub fn orient3(p: &Point, q: &Point, r: &Point) -> Sign {
    if let (Some(a), Some(b), Some(c)) = (small_row(p), small_row(q), small_row(r)) {
        let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]);
        return match det.cmp(&0) {
            Ordering::Greater => Sign::Positive,
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
        };
    }
    let lhs = (&q.x - &p.x) * (&r.y - &p.y);
    let rhs = (&q.y - &p.y) * (&r.x - &p.x);
    match lhs.cmp(&rhs) {
        Ordering::Greater => Sign::Positive,
        Ordering::Less => Sign::Negative,
        Ordering::Equal => Sign::Zero,
    }
}

/// Homogeneous integer coordinates `(X, Y, D)` with `p = (X/D, Y/D)` and
/// `D > 0`, when all three stay below 2^40. A 3x3 determinant of such rows
/// fits in `i128`, and scaling rows by positive `D` keeps its sign.
fn small_row(p: &Point) -> Option<[i128; 3]> {
    const BOUND: i128 = 1 << 40;
    let parts = |v: &Scalar| Some((v.numer().to_i64()? as i128, v.denom().to_i64()? as i128));
    let (nx, dx) = parts(&p.x)?;
    let (ny, dy) = parts(&p.y)?;
    if dx >= BOUND || dy >= BOUND {
        return None;
    }
    let d = dx / dx.gcd(&dy) * dy;
    let x = nx * (d / dx);
    let y = ny * (d / dy);
    (d < BOUND && x.abs() < BOUND && y.abs() < BOUND).then_some([x, y, d])
}

/// Compares `a` and `b` by counterclockwise angle measured from `reference`,
/// with angles taken in `[0, 2π)`. None of the vectors may be zero.
pub fn ccw_angle_cmp(reference: &Vector, a: &Vector, b: &Vector) -> Ordering {
    let rel = |v: &Vector| Vector::new(reference.dot(v), reference.cross(v));
    angle_cmp(&rel(a), &rel(b))
}

/// Total order on nonzero vectors by polar angle in `[0, 2π)`.
pub fn angle_cmp(a: &Vector, b: &Vector) -> Ordering {
    let half = |v: &Vector| {
        if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Unoriented direction as a primitive integer vector whose first nonzero
/// component is positive. Two parallel vectors map to equal directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    dx: BigInt,
    dy: BigInt,
}

impl Direction {
    pub fn from_vector(v: &Vector) -> Option<Direction> {
        if v.is_zero() {
            return None;
        }
        let mut ints = clear_denominators(&[&v.x, &v.y]);
        normalize_sign(&mut ints, 2);
        let dy = ints.pop().unwrap();
        let dx = ints.pop().unwrap();
        Some(Direction { dx, dy })
    }

    pub fn from_ints(dx: i64, dy: i64) -> Option<Direction> {
        Direction::from_vector(&Vector::from_ints(dx, dy))
    }

    pub fn dx(&self) -> &BigInt {
        &self.dx
    }

    pub fn dy(&self) -> &BigInt {
        &self.dy
    }

    pub fn to_vector(&self) -> Vector {
        Vector::new(
            Scalar::from_integer(self.dx.clone()),
            Scalar::from_integer(self.dy.clone()),
        )
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

/// Line `a x + b y = c` with coprime integer coefficients, normalized so the
/// first nonzero of `(a, b)` is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    /// Line `normal · x = offset`; `None` if the normal is zero.
    pub fn with_normal(normal: &Vector, offset: &Scalar) -> Option<Line> {
        if normal.is_zero() {
            return None;
        }
        let mut ints = clear_denominators(&[&normal.x, &normal.y, offset]);
        normalize_sign(&mut ints, 2);
        let c = ints.pop().unwrap();
        let b = ints.pop().unwrap();
        let a = ints.pop().unwrap();
        Some(Line { a, b, c })
    }

    pub fn through(p: &Point, q: &Point) -> Option<Line> {
        let normal = q.sub(p).perp();
        let offset = normal.dot_point(p);
        Line::with_normal(&normal, &offset)
    }

    pub fn from_coefficients(a: BigInt, b: BigInt, c: BigInt) -> Option<Line> {
        let normal = Vector::new(Scalar::from_integer(a), Scalar::from_integer(b));
        Line::with_normal(&normal, &Scalar::from_integer(c))
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn normal(&self) -> Vector {
        Vector::new(
            Scalar::from_integer(self.a.clone()),
            Scalar::from_integer(self.b.clone()),
        )
    }

    pub fn offset(&self) -> Scalar {
        Scalar::from_integer(self.c.clone())
    }

    pub fn direction(&self) -> Direction {
        Direction::from_vector(&self.normal().perp()).expect("line normal is nonzero")
    }

    /// `a x + b y - c`.
    pub fn eval(&self, p: &Point) -> Scalar {
        self.normal().dot_point(p) - self.offset()
    }

    pub fn side(&self, p: &Point) -> Sign {
        Sign::of(&self.eval(p))
    }

    /// True iff the line has a point in common with `body`.
    pub fn meets(&self, body: &ConvexBody) -> bool {
        let (lo, hi) = body.projection_of(&self.normal());
        let c = self.offset();
        lo <= c && c <= hi
    }

    /// True iff the line passes through the interior of `body`, or through the
    /// relative interior when the body is a segment transverse to it.
    pub fn crosses(&self, body: &ConvexBody) -> bool {
        let (lo, hi) = body.projection_of(&self.normal());
        let c = self.offset();
        lo < c && c < hi
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

fn clear_denominators(values: &[&Scalar]) -> Vec<BigInt> {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    ints
}

/// Flips all entries so that the first nonzero among the leading `lead`
/// entries is positive.
fn normalize_sign(ints: &mut [BigInt], lead: usize) {
    let first = ints[..lead].iter().find(|v| !v.is_zero());
    if let Some(v) = first {
        if v.sign() == BigSign::Minus {
            for v in ints.iter_mut() {
                *v = -&*v;
            }
        }
    }
}

pub fn to_f64(v: &Scalar) -> f64 {
    use num::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}
