//! Degree-0 persistent homology transform of planar polygons.
//!
//! The crate computes sublevel-set persistence diagrams of filled polygons in
//! every direction of the circle, checks that the reduced diagram of a
//! star-shaped polygon is the disjoint union of the reduced diagrams of its
//! sectors, and decides whether the resulting diagram bundle over the circle
//! has trivial geometric monodromy.

pub mod corpus;
pub mod geometry;
pub mod monodromy;
pub mod persistence;
pub mod pht;

pub use geometry::{Direction, GeometryError, Point, Polygon};
