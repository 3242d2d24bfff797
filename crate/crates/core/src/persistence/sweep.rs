//! Union–find sweeps computing degree-0 sublevel persistence on graphs.

use crate::geometry::{is_center, Direction, Point, Polygon, Sector, CENTER_TOL};

use super::diagram::{DiagramPoint, PersistenceDiagram};
use super::triangulate::Triangulation;
use super::PersistenceError;

struct UnionFind {
    parent: Vec<usize>,
    /// For roots: the processing rank of the oldest vertex in the component.
    oldest: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            oldest: vec![usize::MAX; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }
}

/// Degree-0 persistence of the lower-star filtration of `heights` on the
/// graph `edges`.
///
/// Vertices are processed in `(height, index)` order; on a merge the
/// component whose oldest vertex was processed later dies (elder rule).
/// Zero-persistence pairs are not reported.
pub fn graph_sweep(heights: &[f64], edges: &[(usize, usize)]) -> Vec<DiagramPoint> {
    let n = heights.len();
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a != b {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| heights[a].total_cmp(&heights[b]).then(a.cmp(&b)));

    let mut uf = UnionFind::new(n);
    let mut processed = vec![false; n];
    let mut points = Vec::new();
    for (rank, &v) in order.iter().enumerate() {
        processed[v] = true;
        uf.oldest[v] = rank;
        for &u in &adjacency[v] {
            if !processed[u] {
                continue;
            }
            let ru = uf.find(u);
            let rv = uf.find(v);
            if ru == rv {
                continue;
            }
            let (elder, younger) = if uf.oldest[ru] < uf.oldest[rv] {
                (ru, rv)
            } else {
                (rv, ru)
            };
            let born = order[uf.oldest[younger]];
            if heights[v] > heights[born] {
                points.push(DiagramPoint::finite(
                    heights[born],
                    heights[v],
                    Some(born),
                    Some(v),
                ));
            }
            uf.parent[younger] = elder;
        }
    }
    for v in 0..n {
        if uf.find(v) == v {
            let born = order[uf.oldest[v]];
            points.push(DiagramPoint::essential(heights[born], Some(born)));
        }
    }
    points
}

/// Sublevel persistence of a filled star-shaped polygon computed from its
/// boundary cycle alone.
///
/// Below the height of the center the filled sublevel set retracts onto the
/// boundary sublevel set; at and above it the sublevel set is connected. So
/// the boundary sweep is clamped: finite classes born at or above `h_v(c)`
/// are dropped and deaths above `h_v(c)` become `h_v(c)` with no vertex.
pub fn boundary_sweep_diagram(
    p: &Polygon,
    c: Point,
    v: Direction,
) -> Result<PersistenceDiagram, PersistenceError> {
    if !is_center(p, c, CENTER_TOL * p.scale()) {
        return Err(PersistenceError::NotACenter { center: c });
    }
    let n = p.len();
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(clamped_sweep(p.vertices(), &edges, v.height(c), v))
}

fn clamped_sweep(
    verts: &[Point],
    edges: &[(usize, usize)],
    center_height: f64,
    v: Direction,
) -> PersistenceDiagram {
    let heights: Vec<f64> = verts.iter().map(|&w| v.height(w)).collect();
    graph_sweep(&heights, edges)
        .into_iter()
        .filter_map(|mut pt| {
            if pt.is_essential() {
                return Some(pt);
            }
            if pt.birth >= center_height {
                return None;
            }
            if pt.death > center_height {
                pt.death = center_height;
                pt.death_vertex = None;
            }
            Some(pt)
        })
        .collect()
}

/// Sublevel persistence of the PL height function on a triangulated polygon.
pub fn lower_star_diagram(t: &Triangulation, v: Direction) -> PersistenceDiagram {
    let heights: Vec<f64> = t.vertices.iter().map(|&w| v.height(w)).collect();
    graph_sweep(&heights, &t.edges).into_iter().collect()
}

/// Diagram of one sector, labelled with polygon vertex ids (`None` for the
/// center). Nondegenerate sectors use the clamped boundary sweep around the
/// center; zero-area sectors sweep their segment complex directly.
pub fn sector_diagram(s: &Sector, v: Direction) -> PersistenceDiagram {
    let verts = s.region.vertices();
    let edges = s.complex_edges();
    let raw = if s.zero_area {
        let heights: Vec<f64> = verts.iter().map(|&w| v.height(w)).collect();
        graph_sweep(&heights, &edges).into_iter().collect()
    } else {
        clamped_sweep(verts, &edges, v.height(s.center), v)
    };
    raw.relabel(|i| s.vertex_ids[i])
}

/// Diagram of one sector via triangulation of its region; independent of
/// the boundary retraction used by [`sector_diagram`].
pub fn sector_diagram_lower_star(
    s: &Sector,
    v: Direction,
) -> Result<PersistenceDiagram, PersistenceError> {
    if s.zero_area {
        return Ok(sector_diagram(s, v));
    }
    let t = super::triangulate::triangulate_region(s.region.vertices())?;
    Ok(lower_star_diagram(&t, v).relabel(|i| s.vertex_ids[i]))
}
