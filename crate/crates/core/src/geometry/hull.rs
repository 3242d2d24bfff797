use serde::Serialize;

use super::point::{orient, Point};
use super::polygon::{Polygon, REL_TOL};

/// Convex hull of a polygon's vertex set, as extreme points in CCW order.
///
/// `indices[i]` is the polygon vertex index of `vertices[i]`. The cycle is
/// rotated so it starts at the hull vertex with the smallest polygon index,
/// which makes hull order agree with boundary order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hull {
    pub vertices: Vec<Point>,
    pub indices: Vec<usize>,
}

impl Hull {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Hull edge `i` as the pair `(x_i, x_{i+1})`.
    pub fn edge(&self, i: usize) -> (Point, Point) {
        let m = self.vertices.len();
        (self.vertices[i % m], self.vertices[(i + 1) % m])
    }
}

/// Andrew's monotone chain. Points lying on a hull edge are dropped.
pub fn convex_hull(p: &Polygon) -> Hull {
    let pts = p.vertices();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        pts[a]
            .x
            .total_cmp(&pts[b].x)
            .then(pts[a].y.total_cmp(&pts[b].y))
    });
    let eps = REL_TOL * p.scale() * p.scale();
    let turns_left = |a: usize, b: usize, c: usize| orient(pts[a], pts[b], pts[c]) > eps;

    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2 && !turns_left(lower[lower.len() - 2], lower[lower.len() - 1], i) {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2 && !turns_left(upper[upper.len() - 2], upper[upper.len() - 1], i) {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    let mut chain = lower;
    chain.extend(upper);

    let start = chain
        .iter()
        .enumerate()
        .min_by_key(|(_, &idx)| idx)
        .map(|(pos, _)| pos)
        .unwrap_or(0);
    chain.rotate_left(start);
    Hull {
        vertices: chain.iter().map(|&i| pts[i]).collect(),
        indices: chain,
    }
}
