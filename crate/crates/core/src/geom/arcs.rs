use num::Zero;

use super::{ConvexBody, Scalar};

/// Connected components of `bd(A) ∩ B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcComponents {
    Count(usize),
    /// The whole boundary of `A` lies in `B`.
    All,
}

impl ArcComponents {
    /// Two or more components: `A \ B` (or `conv \ B`) falls apart.
    pub fn is_split(self) -> bool {
        matches!(self, ArcComponents::Count(k) if k >= 2)
    }
}

/// Number of connected components of `bd(A) ∩ B`, counted cyclically.
///
/// The boundary of a segment body is walked there and back, so a piece cut
/// from the middle of the segment counts twice.
pub fn boundary_arc_components(a: &ConvexBody, b: &ConvexBody) -> ArcComponents {
    let edges = a.edges();
    if edges.is_empty() {
        return if b.contains(&a.vertices()[0]) {
            ArcComponents::All
        } else {
            ArcComponents::Count(0)
        };
    }
    // Edge i occupies parameters [i, i + 1] of the closed walk.
    let mut intervals: Vec<(Scalar, Scalar)> = Vec::new();
    for (i, (p, q)) in edges.iter().enumerate() {
        if let Some((t0, t1)) = b.clip_segment(p, q) {
            let base = Scalar::from_integer(i.into());
            let iv = (&base + t0, &base + t1);
            match intervals.last_mut() {
                Some(last) if last.1 >= iv.0 => {
                    if iv.1 > last.1 {
                        last.1 = iv.1;
                    }
                }
                _ => intervals.push(iv),
            }
        }
    }
    let total = Scalar::from_integer(edges.len().into());
    match intervals.len() {
        0 => ArcComponents::Count(0),
        1 if intervals[0].0.is_zero() && intervals[0].1 == total => ArcComponents::All,
        k => {
            let wraps = intervals[0].0.is_zero() && intervals[k - 1].1 == total;
            ArcComponents::Count(if wraps { k - 1 } else { k })
        }
    }
}
