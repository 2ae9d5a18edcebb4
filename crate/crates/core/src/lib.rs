//! Exact predicates for families of planar convex bodies: convex position,
//! triple orientation, noncrossing, line transversals and order types.
//!
//! Bodies are convex polygons (points and segments included) with rational
//! vertices; every decision is made in exact arithmetic.

pub mod convex_position;
mod error;
pub mod famgen;
mod family;
pub mod geom;
pub mod order_type;
pub mod predicates;

pub use error::{Error, Result};
pub use family::Family;
pub use geom::{ConvexBody, Direction, Line, Point, Scalar, Sign};
