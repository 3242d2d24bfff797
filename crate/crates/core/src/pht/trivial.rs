use crate::geometry::{Direction, Sector};
use crate::persistence::{sector_diagram, DIAGRAM_TOL};

use super::PhtError;

/// A direction in which the sector has a single component at every height.
///
/// Points from the center toward the foot of its perpendicular on the line
/// of the hull edge, or along the edge's outward normal when the center lies
/// on that line. The diagram at the returned direction is checked to be the
/// single essential class born at the center's height.
pub fn sector_trivial_direction(s: &Sector) -> Result<Direction, PhtError> {
    let (a, b) = s.hull_edge;
    let c = s.center;
    let e = b - a;
    let t = (c - a).dot(e) / e.dot(e);
    let foot = a + e * t;
    let offset = foot - c;
    let scale = a.distance(b).max(a.distance(c)).max(b.distance(c));
    let v = if offset.norm() > 1e-12 * scale {
        Direction::from_vector(offset)
    } else {
        // Hull is counter-clockwise, so the outward normal is the edge turned clockwise.
        Direction::from_vector(crate::geometry::Point::new(e.y, -e.x))
    };
    let d = sector_diagram(s, v);
    let ok = d.len() == 1
        && d.points()[0].is_essential()
        && (d.points()[0].birth - v.height(c)).abs() <= DIAGRAM_TOL * scale.max(1.0);
    if ok {
        Ok(v)
    } else {
        Err(PhtError::TrivialDirectionFailed { sector: s.index })
    }
}
