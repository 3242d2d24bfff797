//! Planar polygon geometry: validation, hulls, kernels, sectors and the
//! critical directions at which vertex heights tie.

mod angles;
mod hull;
mod kernel;
mod point;
mod polygon;
mod sector;

use thiserror::Error;

pub use angles::{
    critical_angles, is_general_position, CriticalAngle, CriticalAngleSet, ParallelWitness,
    ANGLE_TOL, PARALLEL_TOL,
};
pub use hull::{convex_hull, Hull};
pub use kernel::{choose_center, inscribed_radius, is_center, kernel, KernelPolygon};
pub use point::{height, normalize_angle, orient, Direction, Point};
pub use polygon::{Polygon, REL_TOL};
pub use sector::{sectors, Sector, CENTER_TOL};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("polygon needs at least 3 distinct vertices, got {count}")]
    TooFewVertices { count: usize },
    #[error("vertex {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("polygon is self-intersecting (edges {first_edge} and {second_edge})")]
    SelfIntersecting {
        first_edge: usize,
        second_edge: usize,
    },
    #[error("polygon has degenerate area {area:e}")]
    DegenerateArea { area: f64 },
    #[error("kernel is empty: polygon is not star-shaped")]
    EmptyKernel,
    #[error("point ({}, {}) is not a center of the polygon", center.x, center.y)]
    CenterNotInKernel { center: Point },
    #[error("center solver failed: {0}")]
    CenterSolver(String),
}
