use std::collections::HashSet;

use super::{convex_subfamily_of_size, ConvexPositionCertificate};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::predicates::{best_transversal, TransversalCertificate};

/// A witness for one side of the transversal / convex-position alternative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DichotomyOutcome {
    /// A line meeting at least `t` members.
    Transversal(TransversalCertificate),
    /// At least `n` members in convex position, with an ordering certificate
    /// over the same indices.
    Convex {
        members: Vec<usize>,
        certificate: ConvexPositionCertificate,
    },
}

impl DichotomyOutcome {
    /// Exact recheck of the populated branch against the thresholds.
    pub fn verify(&self, f: &Family, t: usize, n: usize) -> Result<bool> {
        match self {
            DichotomyOutcome::Transversal(cert) => Ok(cert.members.len() >= t && cert.verify(f)),
            DichotomyOutcome::Convex {
                members,
                certificate,
            } => {
                if members.len() < n {
                    return Ok(false);
                }
                let a: HashSet<_> = members.iter().collect();
                let b: HashSet<_> = certificate.ordering.iter().collect();
                if a != b || a.len() != members.len() {
                    return Ok(false);
                }
                certificate.verify(f)
            }
        }
    }
}

/// Looks for a line meeting `t` members, then for `n` members in convex
/// position. Both searches are direct; neither follows the Ramsey argument.
pub fn dichotomy(f: &Family, t: usize, n: usize) -> Result<DichotomyOutcome> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if let Some(cert) = best_transversal(f) {
        if cert.members.len() >= t {
            return Ok(DichotomyOutcome::Transversal(cert));
        }
    }
    match convex_subfamily_of_size(f, n)? {
        Some(sub) => Ok(DichotomyOutcome::Convex {
            members: sub.members,
            certificate: sub.certificate,
        }),
        None => Err(Error::NoOutcome { t, n }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::famgen::fixture;
    use crate::geom::{ConvexBody, Point};

    fn square(id: &str, x: i64) -> ConvexBody {
        ConvexBody::new(
            id,
            vec![
                Point::from_ints(x, 0),
                Point::from_ints(x + 1, 0),
                Point::from_ints(x + 1, 1),
                Point::from_ints(x, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn squares_on_a_line_give_a_transversal() {
        let f: Family = (0..5).map(|k| square(&k.to_string(), 3 * k)).collect();
        let out = dichotomy(&f, 5, 3).unwrap();
        assert!(matches!(out, DichotomyOutcome::Transversal(_)));
        assert!(out.verify(&f, 5, 3).unwrap());
    }

    #[test]
    fn tri3_gives_a_verifying_branch() {
        let f = fixture("tri3").unwrap();
        let out = dichotomy(&f, 2, 3).unwrap();
        assert!(out.verify(&f, 2, 3).unwrap());
        let out = dichotomy(&f, 4, 3).unwrap();
        assert!(matches!(out, DichotomyOutcome::Convex { .. }));
        assert!(out.verify(&f, 4, 3).unwrap());
    }

    #[test]
    fn too_demanding_thresholds_give_no_outcome() {
        let f = fixture("tri3").unwrap();
        assert_eq!(dichotomy(&f, 4, 4), Err(Error::NoOutcome { t: 4, n: 4 }));
    }
}
