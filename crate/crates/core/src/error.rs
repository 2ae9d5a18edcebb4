use thiserror::Error;

use crate::geom::Line;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("body `{id}` is invalid: {reason}")]
    InvalidBody { id: String, reason: String },

    #[error("duplicate body id `{0}`")]
    DuplicateId(String),

    #[error("family is empty")]
    EmptyFamily,

    #[error("no body with id `{0}`")]
    UnknownBody(String),

    /// Two bodies touch along the boundary of a hull, or touch each other
    /// without overlapping.
    #[error("bodies `{a}` and `{b}` share a boundary point")]
    SharedBoundary { a: String, b: String },

    #[error("bodies {bodies:?} share the tangent line {line}")]
    CommonTangent { bodies: Vec<String>, line: Line },

    #[error("bodies `{a}` and `{b}` overlap, common tangents are undefined")]
    InteriorOverlap { a: String, b: String },

    #[error("body `{0}` does not appear on the hull boundary")]
    NotOnHull(String),

    #[error("triple ({}, {}, {}) has orientation set {orientations}, expected exactly one", ids[0], ids[1], ids[2])]
    NotUniquelyOriented {
        ids: [String; 3],
        orientations: String,
    },

    #[error("points {0}, {1} and {2} are collinear")]
    CollinearPoints(usize, usize, usize),

    #[error("input of size {size} exceeds the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("no transversal of {t} members and no {n} members in convex position")]
    NoOutcome { t: usize, n: usize },

    #[error("generator gave up after {attempts} attempts: {what}")]
    GenerationBudget { attempts: usize, what: String },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
