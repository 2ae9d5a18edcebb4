//! Independent oracles and family sources shared by the integration tests.
//!
//! The oracles use only points, `orient3` and closed containment; they never
//! look at boundary words or arc components.

#![allow(dead_code)]

use std::time::Duration;

use convex_order::famgen::{generate, GenKind, GenSpec};
use convex_order::geom::{orient3, ratio};
use convex_order::predicates::check_assumptions;
use convex_order::{ConvexBody, Family, Point, Scalar, Sign};

/// Samples per hull edge in the boundary oracles, on top of every body
/// vertex that lies on the hull boundary.
pub const EDGE_SAMPLES: i64 = 16;

/// Hull by brute force: a point is a hull vertex iff some line through it
/// has every other point strictly on one side, tested over lines through
/// pairs. Returned counterclockwise.
pub fn naive_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    // directed edge (p, q) of the hull: every other point strictly left, or
    // on the segment between them
    let mut next: Vec<(Point, Point)> = Vec::new();
    for p in &pts {
        for q in &pts {
            if p == q {
                continue;
            }
            let ok = pts.iter().all(|r| match orient3(p, q, r) {
                Sign::Positive => true,
                Sign::Negative => false,
                Sign::Zero => between(p, q, r),
            });
            if ok {
                next.push((p.clone(), q.clone()));
            }
        }
    }
    if next.is_empty() {
        // collinear: the two extremes
        return vec![pts[0].clone(), pts[pts.len() - 1].clone()];
    }
    let mut out = vec![next[0].0.clone()];
    let mut cur = next[0].1.clone();
    while cur != out[0] {
        out.push(cur.clone());
        cur = next.iter().find(|e| e.0 == cur).unwrap().1.clone();
    }
    out
}

fn between(p: &Point, q: &Point, r: &Point) -> bool {
    let within = |a: &Scalar, b: &Scalar, c: &Scalar| (a <= c && c <= b) || (b <= c && c <= a);
    within(&p.x, &q.x, &r.x) && within(&p.y, &q.y, &r.y)
}

/// Points sampled counterclockwise along the boundary of the hull of
/// `bodies`: every hull edge at `EDGE_SAMPLES` even steps, plus each body
/// vertex on the boundary.
pub fn boundary_samples(bodies: &[&ConvexBody]) -> Vec<Point> {
    let all: Vec<Point> = bodies.iter().flat_map(|b| b.vertices().to_vec()).collect();
    let hull = naive_hull(&all);
    let m = hull.len();
    let mut out = Vec::new();
    if m == 1 {
        return hull;
    }
    let edges: Vec<(Point, Point)> = if m == 2 {
        vec![
            (hull[0].clone(), hull[1].clone()),
            (hull[1].clone(), hull[0].clone()),
        ]
    } else {
        (0..m)
            .map(|i| (hull[i].clone(), hull[(i + 1) % m].clone()))
            .collect()
    };
    for (p, q) in &edges {
        // even steps and the body vertices on this edge, in order along it,
        // stopping short of `q` (the next edge starts there)
        let mut on: Vec<Point> = (0..EDGE_SAMPLES)
            .map(|k| p.lerp(q, &ratio(k, EDGE_SAMPLES)))
            .chain(
                all.iter()
                    .filter(|v| *v != q && orient3(p, q, v) == Sign::Zero && between(p, q, v))
                    .cloned(),
            )
            .collect();
        on.sort_by_key(|v| q.sub(p).dot(&v.sub(p)));
        on.dedup();
        out.extend(on);
    }
    out
}

/// Orientation sets `(ccw, cw)` of a triple by the definition: some choice
/// of sampled boundary points, one in each body, oriented that way.
pub fn oracle_orientations(a: &ConvexBody, b: &ConvexBody, c: &ConvexBody) -> (bool, bool) {
    let samples = boundary_samples(&[a, b, c]);
    let pick = |body: &ConvexBody| -> Vec<&Point> {
        let mut v: Vec<&Point> = samples.iter().filter(|p| body.contains(p)).collect();
        v.sort();
        v.dedup();
        v
    };
    let (sa, sb, sc) = (pick(a), pick(b), pick(c));
    let (mut ccw, mut cw) = (false, false);
    for p in &sa {
        for q in &sb {
            for r in &sc {
                match orient3(p, q, r) {
                    Sign::Positive => ccw = true,
                    Sign::Negative => cw = true,
                    Sign::Zero => {}
                }
                if ccw && cw {
                    return (true, true);
                }
            }
        }
    }
    (ccw, cw)
}

/// Whether `x` splits the hull boundary of `bodies` into two or more runs,
/// which for a convex `x` not covering the hull is exactly disconnecting the
/// hull. Decided on the dense boundary samples.
pub fn oracle_disconnects(x: usize, bodies: &[&ConvexBody]) -> bool {
    let samples = boundary_samples(bodies);
    let inside: Vec<bool> = samples.iter().map(|p| bodies[x].contains(p)).collect();
    if inside.iter().all(|&b| b) || !inside.iter().any(|&b| b) {
        return false;
    }
    // count maximal cyclic runs of points outside x
    let n = inside.len();
    (0..n)
        .filter(|&i| !inside[i] && inside[(i + n - 1) % n])
        .count()
        >= 2
}

/// Families from `kinds` round-robin, with sizes cycling through `sizes`,
/// filtered by `keep`, until `want` are collected.
pub fn collect_families(
    kinds: &[GenKind],
    sizes: &[usize],
    base_seed: u64,
    want: usize,
    tweak: impl Fn(&mut GenSpec),
    keep: impl Fn(&Family) -> bool,
) -> Vec<Family> {
    let mut out = Vec::new();
    let mut seed = base_seed;
    while out.len() < want {
        let kind = kinds[(seed as usize) % kinds.len()];
        let size = sizes[(seed as usize / kinds.len()) % sizes.len()];
        let mut spec = GenSpec::new(seed, size, kind);
        tweak(&mut spec);
        seed += 1;
        assert!(
            seed < base_seed + 50 * want as u64 + 1000,
            "source dried up after {} families",
            out.len()
        );
        let Ok(f) = generate(&spec) else { continue };
        assert!(check_assumptions(&f).is_empty());
        if keep(&f) {
            out.push(f);
        }
    }
    out
}

/// Prints one verdict line and fails the test if the criterion failed.
pub fn report(name: &str, ok: usize, total: usize, elapsed: Duration, limit: Duration, note: &str) {
    let pass = ok == total && elapsed <= limit;
    println!(
        "{} {name}: {ok}/{total} in {:.1?} (limit {:?}){}{}",
        if pass { "PASS" } else { "FAIL" },
        elapsed,
        limit,
        if note.is_empty() { "" } else { "; " },
        note
    );
    assert!(pass, "{name} failed: {ok}/{total} in {elapsed:?}");
}
