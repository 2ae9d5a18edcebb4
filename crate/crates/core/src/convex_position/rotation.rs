use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::geom::{ccw_angle_cmp, hull_of_bodies, orient3, ConvexBody, Line, Sign, Vector};
use crate::predicates::OrientationTable;

/// Members ordered by first contact with a tangent line rolling
/// counterclockwise around a base body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationOrder {
    /// Indices into the member family, in contact order.
    pub order: Vec<usize>,
    /// `tangents[k]` is the line at the moment of first contact with
    /// `order[k]`: a common tangent of the base body and that member.
    pub tangents: Vec<Line>,
}

/// Outward normals of the lines supporting both `base` and `member` from the
/// same side, each through a vertex of either body.
fn outer_tangent_normals(base: &ConvexBody, member: &ConvexBody) -> Vec<Vector> {
    let mut out = Vec::new();
    for u in base.vertices() {
        for w in member.vertices() {
            if u == w {
                continue;
            }
            let mut left = true;
            let mut right = true;
            for v in base.vertices().iter().chain(member.vertices()) {
                match orient3(u, w, v) {
                    Sign::Positive => right = false,
                    Sign::Negative => left = false,
                    Sign::Zero => {}
                }
            }
            let d = w.sub(u);
            // bodies on the left: outward normal points right
            if left {
                out.push(d.perp().neg());
            }
            if right {
                out.push(d.perp());
            }
        }
    }
    out
}

/// Outward normal at a hull vertex owned by `base` whose supporting line
/// touches no other body.
fn starting_normal(base: &ConvexBody, members: &Family) -> Result<Vector> {
    let mut all: Vec<&ConvexBody> = vec![base];
    all.extend(members.iter());
    let labeled = hull_of_bodies(&all)?;
    if !labeled.contributes(0) {
        return Err(Error::NotOnHull(base.id().into()));
    }
    let hv = labeled.hull.vertices();
    let m = hv.len();
    let k = (0..m)
        .find(|&k| base.contains(&hv[k]))
        .ok_or_else(|| Error::NotOnHull(base.id().into()))?;
    match m {
        1 => Err(Error::InvalidArgument(
            "all bodies coincide in one point".into(),
        )),
        2 => Ok(hv[k].sub(&hv[1 - k])),
        _ => {
            let prev = &hv[(k + m - 1) % m];
            let next = &hv[(k + 1) % m];
            let n_in = hv[k].sub(prev).perp().neg();
            let n_out = next.sub(&hv[k]).perp().neg();
            Ok(n_in.add(&n_out))
        }
    }
}

/// Orders `members` by when a tangent line of `base`, rolled
/// counterclockwise from a position with every member strictly on one side,
/// first touches them.
pub fn tangent_rotation_order(base: &ConvexBody, members: &Family) -> Result<RotationOrder> {
    let start = starting_normal(base, members)?;
    let mut contacts: Vec<(usize, Vector)> = Vec::with_capacity(members.len());
    for (i, member) in members.iter().enumerate() {
        let first = outer_tangent_normals(base, member)
            .into_iter()
            .min_by(|a, b| ccw_angle_cmp(&start, a, b))
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "member `{}` is never met by the rotating tangent",
                    member.id()
                ))
            })?;
        contacts.push((i, first));
    }
    contacts.sort_by(|a, b| ccw_angle_cmp(&start, &a.1, &b.1).then(a.0.cmp(&b.0)));
    for w in contacts.windows(2) {
        if ccw_angle_cmp(&start, &w[0].1, &w[1].1) == Ordering::Equal {
            return Err(Error::CommonTangent {
                bodies: vec![
                    base.id().into(),
                    members.id(w[0].0).into(),
                    members.id(w[1].0).into(),
                ],
                line: tangent_line(base, &w[0].1),
            });
        }
    }
    Ok(RotationOrder {
        order: contacts.iter().map(|c| c.0).collect(),
        tangents: contacts.iter().map(|c| tangent_line(base, &c.1)).collect(),
    })
}

fn tangent_line(base: &ConvexBody, normal: &Vector) -> Line {
    Line::with_normal(normal, &base.support(normal)).expect("normal is nonzero")
}

/// No member's interior (relative interior for segments) is crossed by any
/// recorded tangent line.
pub fn is_case_two(members: &Family, rotation: &RotationOrder) -> bool {
    rotation
        .tangents
        .iter()
        .all(|line| members.iter().all(|m| !line.crosses(m)))
}

/// Quadruples `i < j < k < l` where `(i,j,k)` and `(j,k,l)` share exactly
/// one orientation `s` but `(i,j,l)` or `(i,k,l)` does not admit `s`.
pub fn transitivity_violations(f: &Family) -> Result<Vec<[usize; 4]>> {
    let table = OrientationTable::new(f)?;
    let n = f.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let shared = table.get(i, j, k).intersection(table.get(j, k, l));
                    if let Some(s) = shared.unique() {
                        if !table.get(i, j, l).contains(s) || !table.get(i, k, l).contains(s) {
                            out.push([i, j, k, l]);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The family, in its given order, satisfies the orientation transitivity
/// hypothesis of the ordered-hypergraph lemma.
pub fn orientation_transitivity_check(f: &Family) -> Result<bool> {
    Ok(transitivity_violations(f)?.is_empty())
}
