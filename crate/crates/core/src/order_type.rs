//! Order types of body families: chirotopes, the 3-term Grassmann-Plücker
//! check, and representation of a family by a point set.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::geom::{orient3, ratio, Point, Sign};
use crate::predicates::{triples, OrientationTable};

/// No triple of the family has both orientations, i.e. no member of a triple
/// disconnects the hull of that triple.
pub fn is_3_nondisconnectable(f: &Family) -> Result<bool> {
    let table = OrientationTable::new(f)?;
    Ok(triples(f.len()).all(|[i, j, k]| !table.get(i, j, k).is_both()))
}

/// An alternating sign map on ordered triples of a ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chirotope {
    ground: Vec<String>,
    signs: Vec<Sign>,
}

/// Sorts three distinct indices, returning the parity of the permutation.
fn sort3(mut t: [usize; 3]) -> ([usize; 3], Sign) {
    let mut parity = Sign::Positive;
    for (a, b) in [(0, 1), (1, 2), (0, 1)] {
        if t[a] > t[b] {
            t.swap(a, b);
            parity = parity.flip();
        }
    }
    (t, parity)
}

impl Chirotope {
    /// Every triple set to zero; fill with [`Chirotope::set_sign`].
    pub fn new(ground: Vec<String>) -> Chirotope {
        let n = ground.len();
        Chirotope {
            ground,
            signs: vec![Sign::Zero; n * n * n],
        }
    }

    /// The order type of a point set (zero on collinear triples).
    pub fn from_points(ground: Vec<String>, points: &[Point]) -> Result<Chirotope> {
        if ground.len() != points.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} points",
                ground.len(),
                points.len()
            )));
        }
        let mut chi = Chirotope::new(ground);
        for [i, j, k] in triples(points.len()) {
            chi.set_sign(i, j, k, orient3(&points[i], &points[j], &points[k]));
        }
        Ok(chi)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    fn slot(&self, t: [usize; 3]) -> usize {
        let n = self.len();
        (t[0] * n + t[1]) * n + t[2]
    }

    /// Sets `chi(i, j, k) = sign` together with every permutation of the
    /// triple, as the alternating rule requires.
    pub fn set_sign(&mut self, i: usize, j: usize, k: usize, sign: Sign) {
        assert!(
            i != j && j != k && i != k,
            "triple indices must be distinct"
        );
        let (sorted, parity) = sort3([i, j, k]);
        let base = sign * parity;
        let [a, b, c] = sorted;
        for (p, s) in [
            ([a, b, c], base),
            ([b, c, a], base),
            ([c, a, b], base),
            ([b, a, c], base.flip()),
            ([a, c, b], base.flip()),
            ([c, b, a], base.flip()),
        ] {
            let slot = self.slot(p);
            self.signs[slot] = s;
        }
    }

    /// `chi(i, j, k)`; zero when two indices coincide.
    pub fn sign(&self, i: usize, j: usize, k: usize) -> Sign {
        if i == j || j == k || i == k {
            return Sign::Zero;
        }
        self.signs[self.slot([i, j, k])]
    }

    /// Signs of the triples `i < j < k` in lexicographic order.
    pub fn increasing_signs(&self) -> Vec<([usize; 3], Sign)> {
        triples(self.len())
            .map(|t| (t, self.sign(t[0], t[1], t[2])))
            .collect()
    }
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, ([i, j, l], s)) in self.increasing_signs().into_iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "({},{},{}) {}",
                self.ground[i],
                self.ground[j],
                self.ground[l],
                s.symbol()
            )?;
        }
        Ok(())
    }
}

/// The sign map of a family in which every triple has exactly one
/// orientation.
pub fn chirotope(f: &Family) -> Result<Chirotope> {
    let table = OrientationTable::new(f)?;
    let mut chi = Chirotope::new(f.ids(&(0..f.len()).collect::<Vec<_>>()));
    for [i, j, k] in triples(f.len()) {
        let set = table.get(i, j, k);
        match set.unique() {
            Some(s) => chi.set_sign(i, j, k, s),
            None => {
                return Err(Error::NotUniquelyOriented {
                    ids: [f.id(i).into(), f.id(j).into(), f.id(k).into()],
                    orientations: set.to_string(),
                })
            }
        }
    }
    Ok(chi)
}

/// A labeling `(a, b, x, y, z)` of distinct elements at which the 3-term
/// Grassmann-Plücker condition fails, if any.
///
/// The condition: the three signs `chi(a,b,x)chi(a,y,z)`,
/// `-chi(a,b,y)chi(a,x,z)` and `chi(a,b,z)chi(a,x,y)` are either all zero or
/// include both `+` and `-`.
pub fn gp3_violation(chi: &Chirotope) -> Option<[usize; 5]> {
    let n = chi.len();
    let s = |i, j, k| chi.sign(i, j, k);
    for a in 0..n {
        for b in 0..n {
            if b == a {
                continue;
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let label = [a, b, x, y, z];
                        if !distinct(&label) {
                            continue;
                        }
                        let terms = [
                            s(a, b, x) * s(a, y, z),
                            (s(a, b, y) * s(a, x, z)).flip(),
                            s(a, b, z) * s(a, x, y),
                        ];
                        let all_zero = terms.iter().all(|&t| t == Sign::Zero);
                        let mixed =
                            terms.contains(&Sign::Positive) && terms.contains(&Sign::Negative);
                        if !(all_zero || mixed) {
                            return Some(label);
                        }
                    }
                }
            }
        }
    }
    None
}

fn distinct(label: &[usize]) -> bool {
    let mut seen = HashSet::new();
    label.iter().all(|i| seen.insert(*i))
}

/// True iff the 3-term Grassmann-Plücker condition holds everywhere.
pub fn gp3_check(chi: &Chirotope) -> bool {
    gp3_violation(chi).is_none()
}

fn check_bijection(n: usize, points: &[Point], bijection: &[usize]) -> Result<()> {
    if points.len() != n || bijection.len() != n {
        return Err(Error::InvalidArgument(format!(
            "a family of {n} bodies needs {n} points and a bijection of length {n}"
        )));
    }
    if !bijection.iter().all(|&p| p < n) || !distinct(bijection) {
        return Err(Error::InvalidArgument(
            "the assignment is not a bijection".into(),
        ));
    }
    for [i, j, k] in triples(n) {
        if orient3(&points[i], &points[j], &points[k]) == Sign::Zero {
            return Err(Error::CollinearPoints(i, j, k));
        }
    }
    Ok(())
}

fn represents(table: &OrientationTable, points: &[Point], bijection: &[usize]) -> bool {
    triples(table.len()).all(|[i, j, k]| {
        let s = orient3(
            &points[bijection[i]],
            &points[bijection[j]],
            &points[bijection[k]],
        );
        table.get(i, j, k).contains(s)
    })
}

/// Body `i` is sent to `points[bijection[i]]`. True iff every body triple
/// admits the orientation of its image points.
///
/// Triples with both orientations impose nothing; a uniquely oriented triple
/// must match its points.
pub fn verify_representation(f: &Family, points: &[Point], bijection: &[usize]) -> Result<bool> {
    check_bijection(f.len(), points, bijection)?;
    let table = OrientationTable::new(f)?;
    Ok(represents(&table, points, bijection))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationCertificate {
    pub points: Vec<Point>,
    /// Body index to point index.
    pub bijection: Vec<usize>,
}

impl RepresentationCertificate {
    pub fn verify(&self, f: &Family) -> Result<bool> {
        verify_representation(f, &self.points, &self.bijection)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationSearch {
    Found(RepresentationCertificate),
    /// The complete grid search ran and found nothing. Only possible for
    /// families small enough for the grid stage.
    Exhausted,
    /// The budget ran out; nothing is known.
    BudgetSpent,
}

/// Families up to this size get the exhaustive grid stage.
pub const GRID_SEARCH_LIMIT: usize = 5;

/// Side of the integer grid used by the exhaustive stage, `[0, GRID_SIDE]^2`.
pub const GRID_SIDE: i64 = 8;

/// Searches for a point set representing the family, deterministically in
/// `(f, budget, seed)`.
///
/// Stages: body centroids; then random boundary points of the bodies (at most
/// a quarter of the budget); then, for at most [`GRID_SEARCH_LIMIT`] bodies,
/// backtracking over the integer grid `[0, 8]^2`, with the first body
/// restricted to a fundamental domain of the quarter-turn rotations about the
/// grid center (rotations preserve orientation, reflections do not). Every
/// candidate point set and every grid placement costs one unit of budget.
pub fn search_representation(f: &Family, budget: u64, seed: u64) -> Result<RepresentationSearch> {
    let n = f.len();
    let table = OrientationTable::new(f)?;
    let identity: Vec<usize> = (0..n).collect();
    let found = |points: Vec<Point>| {
        Ok(RepresentationSearch::Found(RepresentationCertificate {
            points,
            bijection: (0..n).collect(),
        }))
    };
    if budget == 0 {
        return Ok(RepresentationSearch::BudgetSpent);
    }
    let mut spent = 0u64;

    let centroids: Vec<Point> = f.iter().map(|b| b.centroid()).collect();
    spent += 1;
    if general_position(&centroids) && represents(&table, &centroids, &identity) {
        return found(centroids);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_budget = budget / 4;
    while spent < random_budget {
        spent += 1;
        let points: Vec<Point> = f
            .iter()
            .map(|b| {
                let edges = b.edges();
                if edges.is_empty() {
                    return b.vertices()[0].clone();
                }
                let (p, q) = edges.choose(&mut rng).expect("nonempty");
                p.lerp(q, &ratio(rng.gen_range(0..64), 64))
            })
            .collect();
        if general_position(&points) && represents(&table, &points, &identity) {
            return found(points);
        }
    }

    if n > GRID_SEARCH_LIMIT {
        return Ok(RepresentationSearch::BudgetSpent);
    }
    let grid: Vec<Point> = (0..=GRID_SIDE)
        .flat_map(|x| (0..=GRID_SIDE).map(move |y| Point::from_ints(x, y)))
        .collect();
    let half = GRID_SIDE / 2;
    let first: Vec<Point> = (0..half)
        .flat_map(|x| (0..=half).map(move |y| Point::from_ints(x, y)))
        .chain(std::iter::once(Point::from_ints(half, half)))
        .collect();
    let mut search = GridSearch {
        table: &table,
        grid: &grid,
        first: &first,
        placed: Vec::with_capacity(n),
        spent,
        budget,
    };
    match search.extend() {
        GridResult::Found => found(search.placed),
        GridResult::Exhausted => Ok(RepresentationSearch::Exhausted),
        GridResult::OutOfBudget => Ok(RepresentationSearch::BudgetSpent),
    }
}

fn general_position(points: &[Point]) -> bool {
    triples(points.len()).all(|[i, j, k]| orient3(&points[i], &points[j], &points[k]) != Sign::Zero)
}

enum GridResult {
    Found,
    Exhausted,
    OutOfBudget,
}

struct GridSearch<'a> {
    table: &'a OrientationTable,
    grid: &'a [Point],
    first: &'a [Point],
    placed: Vec<Point>,
    spent: u64,
    budget: u64,
}

impl GridSearch<'_> {
    fn fits(&self, p: &Point) -> bool {
        let k = self.placed.len();
        if self.placed.contains(p) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let s = orient3(&self.placed[i], &self.placed[j], p);
                if !self.table.get(i, j, k).contains(s) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self) -> GridResult {
        if self.placed.len() == self.table.len() {
            return GridResult::Found;
        }
        let candidates = if self.placed.is_empty() {
            self.first
        } else {
            self.grid
        };
        for p in candidates {
            if self.spent >= self.budget {
                return GridResult::OutOfBudget;
            }
            self.spent += 1;
            if !self.fits(p) {
                continue;
            }
            self.placed.push(p.clone());
            match self.extend() {
                GridResult::Exhausted => {
                    self.placed.pop();
                }
                other => return other,
            }
        }
        GridResult::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::famgen::fixture;
    use crate::geom::ConvexBody;

    fn points(coords: &[(i64, i64)]) -> Vec<Point> {
        coords
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect()
    }

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn nondisconnectability_examples() {
        assert!(is_3_nondisconnectable(&fixture("tri3").unwrap()).unwrap());
        assert!(!is_3_nondisconnectable(&fixture("bar").unwrap()).unwrap());
    }

    #[test]
    fn tri3_chirotope_alternates() {
        let chi = chirotope(&fixture("tri3").unwrap()).unwrap();
        assert_eq!(chi.sign(0, 1, 2), Sign::Positive);
        assert_eq!(chi.sign(1, 0, 2), Sign::Negative);
        assert_eq!(chi.sign(2, 0, 1), Sign::Positive);
        assert_eq!(chi.sign(0, 0, 1), Sign::Zero);
    }

    #[test]
    fn bar_has_no_chirotope() {
        assert!(matches!(
            chirotope(&fixture("bar").unwrap()),
            Err(Error::NotUniquelyOriented { .. })
        ));
    }

    #[test]
    fn convex_pentagon_satisfies_gp3() {
        let pts = points(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        let chi = Chirotope::from_points(labels(5), &pts).unwrap();
        assert!(gp3_check(&chi));
    }

    #[test]
    fn flipping_a_triple_of_a_pentagon_breaks_gp3() {
        let pts = points(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        let chi = Chirotope::from_points(labels(5), &pts).unwrap();
        let flipped = |[i, j, k]: [usize; 3]| {
            let mut c = chi.clone();
            c.set_sign(i, j, k, chi.sign(i, j, k).flip());
            c
        };
        // three consecutive hull vertices: pushing the middle one inward
        // realizes the flip
        assert!(gp3_check(&flipped([0, 1, 2])));
        assert!(!gp3_check(&flipped([0, 2, 4])));
    }

    #[test]
    fn representation_examples() {
        let tri3 = fixture("tri3").unwrap();
        let c: Vec<Point> = tri3.iter().map(ConvexBody::centroid).collect();
        assert!(verify_representation(&tri3, &c, &[0, 1, 2]).unwrap());
        assert!(!verify_representation(&tri3, &c, &[1, 0, 2]).unwrap());
        let bar = fixture("bar").unwrap();
        let any = points(&[(0, 0), (1, 0), (0, 1)]);
        assert!(verify_representation(&bar, &any, &[0, 1, 2]).unwrap());
        assert!(verify_representation(&bar, &any, &[2, 1, 0]).unwrap());
        let line = points(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(
            verify_representation(&bar, &line, &[0, 1, 2]),
            Err(Error::CollinearPoints(0, 1, 2))
        );
    }

    #[test]
    fn search_finds_tri3_and_hidden4() {
        for name in ["tri3", "hidden4"] {
            let f = fixture(name).unwrap();
            match search_representation(&f, 100_000, 7).unwrap() {
                RepresentationSearch::Found(cert) => assert!(cert.verify(&f).unwrap()),
                other => panic!("{name}: {other:?}"),
            }
        }
    }
}
