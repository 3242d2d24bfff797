use minilp::{ComparisonOp, OptimizationDirection, Problem};
use serde::Serialize;

use super::point::{orient, Point};
use super::polygon::{bbox, signed_area, Polygon, REL_TOL};
use super::GeometryError;

/// The set of centers of a polygon: a convex, possibly empty, polygon.
///
/// A kernel may be degenerate (a segment or a single point) when the
/// half-planes meet in zero area.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelPolygon {
    pub vertices: Vec<Point>,
    /// Length scale of the source polygon, used for tolerances.
    #[serde(skip)]
    scale: f64,
}

impl KernelPolygon {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        if self.vertices.len() < 3 {
            0.0
        } else {
            signed_area(&self.vertices).abs()
        }
    }

    /// Zero-area but nonempty.
    pub fn is_degenerate(&self) -> bool {
        !self.is_empty() && self.area() <= REL_TOL * self.scale * self.scale
    }

    /// Membership with an absolute distance tolerance.
    pub fn contains(&self, q: Point, tol: f64) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => q.distance(self.vertices[0]) <= tol,
            _ if self.is_degenerate() => {
                let (a, b) = farthest_pair(&self.vertices);
                super::polygon::segment_point_distance(a, b, q) <= tol
            }
            n => (0..n).all(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                orient(a, b, q) >= -tol * (b - a).norm()
            }),
        }
    }
}

/// Intersection of the interior half-planes of every edge, clipped to the
/// bounding box of the polygon.
pub fn kernel(p: &Polygon) -> KernelPolygon {
    let scale = p.scale();
    let eps = REL_TOL * scale;
    let (lo, hi) = bbox(p.vertices());
    let mut region = vec![lo, Point::new(hi.x, lo.y), hi, Point::new(lo.x, hi.y)];
    for (a, b) in p.edges() {
        region = clip_left_of(&region, a, b, eps);
        if region.is_empty() {
            break;
        }
    }
    KernelPolygon {
        vertices: dedup_cycle(region, eps),
        scale,
    }
}

/// True when `c` sees the whole polygon, i.e. lies on the inner side of every
/// edge line up to the absolute tolerance `tol`.
pub fn is_center(p: &Polygon, c: Point, tol: f64) -> bool {
    p.edges()
        .all(|(a, b)| orient(a, b, c) >= -tol * (b - a).norm())
}

fn clip_left_of(poly: &[Point], a: Point, b: Point, eps: f64) -> Vec<Point> {
    let len = (b - a).norm();
    let dist = |q: Point| orient(a, b, q) / len;
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let s = poly[i];
        let e = poly[(i + 1) % n];
        let (ds, de) = (dist(s), dist(e));
        let s_in = ds >= -eps;
        let e_in = de >= -eps;
        if s_in {
            out.push(s);
        }
        if s_in != e_in && (ds - de).abs() > 0.0 {
            let t = ds / (ds - de);
            out.push(s.lerp(e, t));
        }
    }
    out
}

fn dedup_cycle(pts: Vec<Point>, eps: f64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(pts.len());
    for p in pts {
        if out.last().is_some_and(|q| q.distance(p) <= eps) {
            continue;
        }
        out.push(p);
    }
    while out.len() > 1 && out[0].distance(out[out.len() - 1]) <= eps {
        out.pop();
    }
    out
}

fn farthest_pair(pts: &[Point]) -> (Point, Point) {
    let mut best = (pts[0], pts[0], 0.0);
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            let d = a.distance(b);
            if d > best.2 {
                best = (a, b, d);
            }
        }
    }
    (best.0, best.1)
}

/// Chebyshev center of the kernel: the center of the largest inscribed
/// circle. Ties are broken by minimising `x`, then `y`. A zero-area kernel
/// yields the midpoint of its longest extent.
pub fn choose_center(k: &KernelPolygon) -> Result<Point, GeometryError> {
    if k.is_empty() {
        return Err(GeometryError::EmptyKernel);
    }
    if k.vertices.len() < 3 || k.is_degenerate() {
        let (a, b) = farthest_pair(&k.vertices);
        return Ok(a.midpoint(b));
    }
    let (radius, _) = solve_center(k, Objective::Radius, None)?;
    let slack = REL_TOL * k.scale.max(radius);
    let (x_min, _) = solve_center(k, Objective::MinX, Some((radius - slack, None)))?;
    let (_, c) = solve_center(
        k,
        Objective::MinY,
        Some((radius - slack, Some(x_min + slack))),
    )?;
    Ok(c)
}

/// Largest inscribed circle radius of a nondegenerate kernel.
pub fn inscribed_radius(k: &KernelPolygon) -> Result<f64, GeometryError> {
    if k.is_empty() {
        return Err(GeometryError::EmptyKernel);
    }
    if k.is_degenerate() {
        return Ok(0.0);
    }
    solve_center(k, Objective::Radius, None).map(|(r, _)| r)
}

enum Objective {
    Radius,
    MinX,
    MinY,
}

/// LP over `(x, y, r)`: every edge's inward unit normal satisfies
/// `n · (p - a) >= r`. Returns the optimal objective and the center.
fn solve_center(
    k: &KernelPolygon,
    objective: Objective,
    bounds: Option<(f64, Option<f64>)>,
) -> Result<(f64, Point), GeometryError> {
    let dir = match objective {
        Objective::Radius => OptimizationDirection::Maximize,
        _ => OptimizationDirection::Minimize,
    };
    let (lo, hi) = bbox(&k.vertices);
    let (cx, cy, cr) = match objective {
        Objective::Radius => (0.0, 0.0, 1.0),
        Objective::MinX => (1.0, 0.0, 0.0),
        Objective::MinY => (0.0, 1.0, 0.0),
    };
    let mut lp = Problem::new(dir);
    let (r_min, x_max) = bounds.unwrap_or((0.0, None));
    let x = lp.add_var(cx, (lo.x, x_max.unwrap_or(hi.x).max(lo.x)));
    let y = lp.add_var(cy, (lo.y, hi.y));
    let r = lp.add_var(cr, (r_min.max(0.0), f64::INFINITY));
    let n = k.vertices.len();
    for i in 0..n {
        let a = k.vertices[i];
        let b = k.vertices[(i + 1) % n];
        let e = b - a;
        let len = e.norm();
        if len == 0.0 {
            continue;
        }
        let normal = Point::new(-e.y / len, e.x / len);
        lp.add_constraint(
            [(x, normal.x), (y, normal.y), (r, -1.0)],
            ComparisonOp::Ge,
            normal.dot(a),
        );
    }
    let sol = lp
        .solve()
        .map_err(|e| GeometryError::CenterSolver(e.to_string()))?;
    Ok((sol.objective(), Point::new(sol[x], sol[y])))
}
