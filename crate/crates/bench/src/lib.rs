//! Benchmark fixtures shared by the criterion targets.

use pht_core::corpus::random_star;
use pht_core::persistence::{lower_star_diagram, triangulate, PersistenceDiagram};
use pht_core::{Direction, Polygon};

/// Seeded star-shaped polygon with `k` vertices.
pub fn star(k: usize) -> Polygon {
    random_star(k, 42).expect("fixture generates")
}

/// A pair of nearby diagrams of the same polygon.
pub fn diagram_pair(p: &Polygon) -> (PersistenceDiagram, PersistenceDiagram) {
    let t = triangulate(p).expect("fixture triangulates");
    (
        lower_star_diagram(&t, Direction::new(4.0)),
        lower_star_diagram(&t, Direction::new(4.05)),
    )
}
