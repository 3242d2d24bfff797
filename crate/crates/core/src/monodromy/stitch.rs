use serde::Serialize;

use crate::persistence::DiagramPoint;

/// How off-diagonal points on either side of a critical angle correspond.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Pairing {
    /// `(left index, right index)` of points continuing through the event.
    pub pairs: Vec<(usize, usize)>,
    /// Left points whose section ends on the diagonal.
    pub terminated: Vec<usize>,
    /// Right points whose section starts on the diagonal.
    pub started: Vec<usize>,
}

fn min_gap(points: &[DiagramPoint]) -> f64 {
    let mut gap = f64::INFINITY;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            gap = gap.min(a.linf(b));
        }
    }
    gap
}

/// Match finite points just before (`left`) and just after (`right`) a
/// critical angle through the diagram exactly at it (`hinge`).
///
/// Hinge points within `floor` of the diagonal count as the diagonal. Every
/// other hinge point must be farther than `radius` from the diagonal and
/// have exactly one partner within `radius` on each side, and every leftover
/// point must lie within `2 * radius` of the diagonal. Returns `None` when
/// any of this fails or when `radius` is not below half the smallest
/// pairwise gap on either side; the caller then shrinks the offset.
pub fn stitch(
    left: &[DiagramPoint],
    hinge: &[DiagramPoint],
    right: &[DiagramPoint],
    radius: f64,
    floor: f64,
) -> Option<Pairing> {
    if !(radius < 0.5 * min_gap(left) && radius < 0.5 * min_gap(right)) {
        return None;
    }
    let mut used_left = vec![false; left.len()];
    let mut used_right = vec![false; right.len()];
    let mut pairs = Vec::new();
    for q in hinge.iter().filter(|q| q.diagonal_distance() > floor) {
        if q.diagonal_distance() <= radius {
            return None;
        }
        let l = unique_candidate(left, q, radius)?;
        let r = unique_candidate(right, q, radius)?;
        if used_left[l] || used_right[r] {
            return None;
        }
        used_left[l] = true;
        used_right[r] = true;
        pairs.push((l, r));
    }
    let leftover = |pts: &[DiagramPoint], used: &[bool]| -> Option<Vec<usize>> {
        let idx: Vec<usize> = (0..pts.len()).filter(|&i| !used[i]).collect();
        idx.iter()
            .all(|&i| pts[i].diagonal_distance() <= 2.0 * radius)
            .then_some(idx)
    };
    let terminated = leftover(left, &used_left)?;
    let started = leftover(right, &used_right)?;
    pairs.sort_unstable();
    Some(Pairing {
        pairs,
        terminated,
        started,
    })
}

fn unique_candidate(side: &[DiagramPoint], q: &DiagramPoint, radius: f64) -> Option<usize> {
    let mut hits = side.iter().enumerate().filter(|(_, p)| p.linf(q) <= radius);
    let (i, _) = hits.next()?;
    hits.next().is_none().then_some(i)
}
