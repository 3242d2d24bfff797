use serde::Serialize;

use super::hull::Hull;
use super::kernel::is_center;
use super::point::{orient, Point};
use super::polygon::{Polygon, REL_TOL};
use super::GeometryError;

/// Absolute center-membership tolerance, relative to the polygon scale.
pub const CENTER_TOL: f64 = 1e-10;

/// The part of a star-shaped polygon cut out by one hull edge and the center.
///
/// `region` starts at the center and then follows `x_i`, the boundary
/// vertices strictly between `x_i` and `x_{i+1}`, and `x_{i+1}`. For a
/// zero-area sector (center on the hull edge) the region is the segment
/// complex `x_i – c – x_{i+1}` stored as `[c, x_i, x_{i+1}]`.
#[derive(Clone, Debug, Serialize)]
pub struct Sector {
    pub index: usize,
    pub hull_edge: (Point, Point),
    pub center: Point,
    pub region: Polygon,
    /// Polygon vertex index of each region vertex; `None` for the center.
    pub vertex_ids: Vec<Option<usize>>,
    pub zero_area: bool,
}

impl Sector {
    /// Edges of the complex whose sublevel sets are tracked: the boundary
    /// cycle of the region, or the two segments of a zero-area sector.
    pub fn complex_edges(&self) -> Vec<(usize, usize)> {
        if self.zero_area {
            vec![(0, 1), (0, 2)]
        } else {
            let n = self.region.len();
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
    }

    /// Polygon vertex indices touched by this sector (center excluded).
    pub fn polygon_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertex_ids.iter().flatten().copied()
    }
}

/// One sector per hull edge, in hull order.
pub fn sectors(p: &Polygon, c: Point, hull: &Hull) -> Result<Vec<Sector>, GeometryError> {
    let scale = p.scale();
    if !is_center(p, c, CENTER_TOL * scale) {
        return Err(GeometryError::CenterNotInKernel { center: c });
    }
    let n = p.len();
    let m = hull.len();
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let (xa, xb) = hull.edge(i);
        let ia = hull.indices[i];
        let ib = hull.indices[(i + 1) % m];
        let edge_len = (xb - xa).norm();
        let zero_area = orient(xa, xb, c).abs() <= REL_TOL * edge_len * scale;
        let center_id = p.vertices().iter().position(|&w| w == c);
        let (region, vertex_ids) = if zero_area {
            (vec![c, xa, xb], vec![center_id, Some(ia), Some(ib)])
        } else {
            let mut pts = vec![c];
            let mut ids = vec![center_id];
            let mut j = ia;
            loop {
                pts.push(p.vertex(j));
                ids.push(Some(j));
                if j == ib {
                    break;
                }
                j = (j + 1) % n;
            }
            (pts, ids)
        };
        out.push(Sector {
            index: i,
            hull_edge: (xa, xb),
            center: c,
            region: Polygon::from_ccw_unchecked(region),
            vertex_ids,
            zero_area,
        });
    }
    Ok(out)
}
