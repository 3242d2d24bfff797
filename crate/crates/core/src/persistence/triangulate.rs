use crate::geometry::{orient, Point, Polygon};

use super::PersistenceError;

/// Triangulation of a polygon using only its own vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangulation {
    pub vertices: Vec<Point>,
    pub triangles: Vec<[usize; 3]>,
    /// Every triangle edge once, as `(low, high)` index pairs, sorted.
    pub edges: Vec<(usize, usize)>,
}

/// Ear clipping; the ear with the lowest vertex index is clipped first.
pub fn triangulate(p: &Polygon) -> Result<Triangulation, PersistenceError> {
    triangulate_region(p.vertices())
}

/// Ear clipping on any CCW simple vertex cycle.
pub(crate) fn triangulate_region(verts: &[Point]) -> Result<Triangulation, PersistenceError> {
    let n = verts.len();
    if n < 3 {
        return Err(PersistenceError::TriangulationFailed { remaining: n });
    }
    let scale = crate::geometry::Polygon::from_ccw_unchecked(verts.to_vec()).scale();
    let eps = 1e-14 * scale * scale;
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut triangles = Vec::with_capacity(n - 2);

    while remaining.len() > 3 {
        let m = remaining.len();
        let ear = (0..m).find(|&pos| {
            let a = remaining[(pos + m - 1) % m];
            let b = remaining[pos];
            let c = remaining[(pos + 1) % m];
            let (pa, pb, pc) = (verts[a], verts[b], verts[c]);
            if orient(pa, pb, pc) <= eps {
                return false;
            }
            remaining.iter().all(|&q| {
                if q == a || q == b || q == c {
                    return true;
                }
                let pq = verts[q];
                if pq == pa || pq == pb || pq == pc {
                    return true;
                }
                !(orient(pa, pb, pq) >= -eps
                    && orient(pb, pc, pq) >= -eps
                    && orient(pc, pa, pq) >= -eps)
            })
        });
        let Some(pos) = ear else {
            return Err(PersistenceError::TriangulationFailed { remaining: m });
        };
        let a = remaining[(pos + m - 1) % m];
        let b = remaining[pos];
        let c = remaining[(pos + 1) % m];
        triangles.push([a, b, c]);
        remaining.remove(pos);
    }
    triangles.push([remaining[0], remaining[1], remaining[2]]);

    let mut edges: Vec<(usize, usize)> = triangles
        .iter()
        .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])])
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(Triangulation {
        vertices: verts.to_vec(),
        triangles,
        edges,
    })
}
