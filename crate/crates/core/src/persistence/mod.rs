//! Degree-0 sublevel-set persistence of filled polygons and the bottleneck
//! metric on diagrams.

mod bottleneck;
mod diagram;
mod sweep;
mod triangulate;

use thiserror::Error;

use crate::geometry::Point;

pub use bottleneck::{bottleneck, bottleneck_no_diagonal, multiset_equal, Matched, Matching};
pub(crate) use diagram::ser_death;
pub use diagram::{DiagramPoint, PersistenceDiagram};
pub use sweep::{
    boundary_sweep_diagram, graph_sweep, lower_star_diagram, sector_diagram,
    sector_diagram_lower_star,
};
pub use triangulate::{triangulate, Triangulation};

/// Default tolerance for comparing diagrams.
pub const DIAGRAM_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PersistenceError {
    #[error("diagram has no essential class to remove")]
    NoEssentialClass,
    #[error("point ({}, {}) is not a center; the boundary sweep needs a star-shaped polygon", center.x, center.y)]
    NotACenter { center: Point },
    #[error("ear clipping stalled with {remaining} vertices left")]
    TriangulationFailed { remaining: usize },
}
