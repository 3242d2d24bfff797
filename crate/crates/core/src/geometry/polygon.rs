use serde::{Deserialize, Serialize};

use super::point::{orient, Point};
use super::GeometryError;

/// Relative tolerance for collinearity and coincidence tests.
pub const REL_TOL: f64 = 1e-12;

/// Closed, simple, counter-clockwise polygon.
///
/// Vertices are stored without repeating the first one at the end. Edge `i`
/// runs from vertex `i` to vertex `(i + 1) % len`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPolygon", into = "RawPolygon")]
pub struct Polygon {
    vertices: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct RawPolygon {
    vertices: Vec<[f64; 2]>,
}

impl TryFrom<RawPolygon> for Polygon {
    type Error = GeometryError;
    fn try_from(raw: RawPolygon) -> Result<Self, Self::Error> {
        Polygon::new(raw.vertices.into_iter().map(Point::from).collect())
    }
}

impl From<Polygon> for RawPolygon {
    fn from(p: Polygon) -> Self {
        RawPolygon {
            vertices: p.vertices.iter().map(|v| [v.x, v.y]).collect(),
        }
    }
}

impl Polygon {
    /// Validate a raw vertex cycle.
    ///
    /// Consecutive duplicates (including a repeated closing vertex) are
    /// collapsed, vertices in the interior of a straight run are removed and
    /// clockwise input is reversed.
    pub fn new(raw: Vec<Point>) -> Result<Self, GeometryError> {
        if let Some(i) = raw.iter().position(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite { index: i });
        }
        if raw.len() < 3 {
            return Err(GeometryError::TooFewVertices { count: raw.len() });
        }
        let scale = bbox_diagonal(&raw).max(f64::MIN_POSITIVE);
        let mut verts = collapse_duplicates(raw, REL_TOL * scale);
        if verts.len() < 3 {
            return Err(GeometryError::TooFewVertices { count: verts.len() });
        }

        // a vertex where the boundary folds back on itself is an overlap
        let n = verts.len();
        for i in 0..n {
            let a = verts[(i + n - 1) % n];
            let b = verts[i];
            let c = verts[(i + 1) % n];
            if is_collinear(a, b, c) && (b - a).dot(c - b) < 0.0 {
                return Err(GeometryError::SelfIntersecting {
                    first_edge: (i + n - 1) % n,
                    second_edge: i,
                });
            }
        }
        verts = drop_straight_vertices(verts);
        if verts.len() < 3 {
            return Err(GeometryError::TooFewVertices { count: verts.len() });
        }

        if let Some((first_edge, second_edge)) = find_crossing(&verts) {
            return Err(GeometryError::SelfIntersecting {
                first_edge,
                second_edge,
            });
        }
        let area = signed_area(&verts);
        if area.abs() < REL_TOL * scale * scale {
            return Err(GeometryError::DegenerateArea { area });
        }
        if area < 0.0 {
            verts.reverse();
        }
        Ok(Self { vertices: verts })
    }

    /// Wrap vertices that are already known to form a CCW region (sector
    /// regions, segment sectors). No checks are performed.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> Self {
        Self { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn signed_area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// Length of the bounding-box diagonal; the natural length scale for
    /// tolerances.
    pub fn scale(&self) -> f64 {
        bbox_diagonal(&self.vertices)
    }

    pub fn bbox(&self) -> (Point, Point) {
        bbox(&self.vertices)
    }

    /// Largest vertex norm, which is the Lipschitz constant of the PHT.
    pub fn max_norm(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Closed point-in-polygon test; points within `tol` of the boundary count
    /// as inside.
    pub fn contains(&self, q: Point, tol: f64) -> bool {
        if self
            .edges()
            .any(|(a, b)| segment_point_distance(a, b, q) <= tol)
        {
            return true;
        }
        let mut winding = 0i32;
        for (a, b) in self.edges() {
            if a.y <= q.y {
                if b.y > q.y && orient(a, b, q) > 0.0 {
                    winding += 1;
                }
            } else if b.y <= q.y && orient(a, b, q) < 0.0 {
                winding -= 1;
            }
        }
        winding != 0
    }

    /// Sampled segment-containment: `samples` evenly spaced points on `a–b`
    /// must all lie in the closed polygon, and the open segment must not
    /// properly cross any edge.
    pub fn contains_segment(&self, a: Point, b: Point, samples: usize, tol: f64) -> bool {
        for (p, q) in self.edges() {
            if proper_crossing(a, b, p, q) {
                return false;
            }
        }
        (0..=samples).all(|j| self.contains(a.lerp(b, j as f64 / samples.max(1) as f64), tol))
    }
}

pub(crate) fn signed_area(verts: &[Point]) -> f64 {
    let n = verts.len();
    0.5 * (0..n)
        .map(|i| verts[i].cross(verts[(i + 1) % n]))
        .sum::<f64>()
}

pub(crate) fn bbox(verts: &[Point]) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in verts {
        lo.x = lo.x.min(v.x);
        lo.y = lo.y.min(v.y);
        hi.x = hi.x.max(v.x);
        hi.y = hi.y.max(v.y);
    }
    (lo, hi)
}

pub(crate) fn bbox_diagonal(verts: &[Point]) -> f64 {
    if verts.is_empty() {
        return 0.0;
    }
    let (lo, hi) = bbox(verts);
    (hi - lo).norm()
}

/// Collinearity with a tolerance relative to the two edge lengths.
pub(crate) fn is_collinear(a: Point, b: Point, c: Point) -> bool {
    let u = b - a;
    let w = c - b;
    u.cross(w).abs() <= REL_TOL * u.norm() * w.norm()
}

pub(crate) fn segment_point_distance(a: Point, b: Point, q: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return q.distance(a);
    }
    let t = ((q - a).dot(ab) / len2).clamp(0.0, 1.0);
    q.distance(a + ab * t)
}

/// True when the open segments `a–b` and `p–q` cross at a single interior
/// point of both.
pub(crate) fn proper_crossing(a: Point, b: Point, p: Point, q: Point) -> bool {
    let d1 = orient(p, q, a);
    let d2 = orient(p, q, b);
    let d3 = orient(a, b, p);
    let d4 = orient(a, b, q);
    let eps = REL_TOL * (b - a).norm() * (q - p).norm();
    ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps))
        && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))
}

/// Closed segment intersection (touching counts).
pub(crate) fn segments_touch(a: Point, b: Point, p: Point, q: Point) -> bool {
    if proper_crossing(a, b, p, q) {
        return true;
    }
    let tol = REL_TOL * ((b - a).norm() + (q - p).norm());
    segment_point_distance(p, q, a) <= tol
        || segment_point_distance(p, q, b) <= tol
        || segment_point_distance(a, b, p) <= tol
        || segment_point_distance(a, b, q) <= tol
}

fn collapse_duplicates(raw: Vec<Point>, tol: f64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(raw.len());
    for p in raw {
        if out.last().is_some_and(|q| q.distance(p) <= tol) {
            continue;
        }
        out.push(p);
    }
    while out.len() > 1 && out[0].distance(out[out.len() - 1]) <= tol {
        out.pop();
    }
    out
}

fn drop_straight_vertices(mut verts: Vec<Point>) -> Vec<Point> {
    loop {
        let n = verts.len();
        if n < 3 {
            return verts;
        }
        let hit =
            (0..n).find(|&i| is_collinear(verts[(i + n - 1) % n], verts[i], verts[(i + 1) % n]));
        match hit {
            Some(i) => {
                verts.remove(i);
            }
            None => return verts,
        }
    }
}

fn find_crossing(verts: &[Point]) -> Option<(usize, usize)> {
    let n = verts.len();
    for i in 0..n {
        let (a, b) = (verts[i], verts[(i + 1) % n]);
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (p, q) = (verts[j], verts[(j + 1) % n]);
            if segments_touch(a, b, p, q) {
                return Some((i, j));
            }
        }
    }
    None
}
