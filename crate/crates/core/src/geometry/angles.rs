use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::Serialize;

use super::point::{normalize_angle, Point};
use super::polygon::Polygon;

/// Default relative tolerance for the parallel-pair test.
pub const PARALLEL_TOL: f64 = 1e-12;
/// Absolute tolerance for merging nearly equal angles.
pub const ANGLE_TOL: f64 = 1e-12;

/// Two vertex pairs spanning parallel but distinct lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelWitness {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

/// Checks that no two vertex pairs span parallel, distinct lines.
///
/// Pairs are sorted by direction modulo π, so only pairs whose directions
/// agree to within the tolerance are compared. Returns the lexicographically
/// smallest offending pair of pairs.
pub fn is_general_position(p: &Polygon, tol: f64) -> (bool, Option<ParallelWitness>) {
    let w = p.vertices();
    let n = w.len();
    let mut dirs: Vec<(f64, (usize, usize))> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let d = w[j] - w[i];
            dirs.push((d.y.atan2(d.x).rem_euclid(PI), (i, j)));
        }
    }
    dirs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let window = 4.0 * tol + 1e-14;
    let m = dirs.len();
    let mut best: Option<ParallelWitness> = None;
    let mut consider = |a: (usize, usize), b: (usize, usize)| {
        if parallel_distinct(w, a, b, tol) {
            let (first, second) = if a < b { (a, b) } else { (b, a) };
            let cand = ParallelWitness { first, second };
            if best.is_none_or(|cur| (cand.first, cand.second) < (cur.first, cur.second)) {
                best = Some(cand);
            }
        }
    };
    for s in 0..m {
        let mut t = s + 1;
        while t < m && dirs[t].0 - dirs[s].0 <= window {
            consider(dirs[s].1, dirs[t].1);
            t += 1;
        }
        // directions just below π are parallel to those just above 0
        let mut t = 0;
        while t < s && dirs[t].0 + PI - dirs[s].0 <= window {
            consider(dirs[s].1, dirs[t].1);
            t += 1;
        }
    }
    (best.is_none(), best)
}

fn parallel_distinct(w: &[Point], a: (usize, usize), b: (usize, usize), tol: f64) -> bool {
    let d1 = w[a.1] - w[a.0];
    let d2 = w[b.1] - w[b.0];
    if d1.cross(d2).abs() > tol * d1.norm() * d2.norm() {
        return false;
    }
    // parallel: same supporting line iff the far endpoint of `b` is on line `a`
    let q = if (w[b.0] - w[a.0]).norm() >= (w[b.1] - w[a.0]).norm() {
        w[b.0]
    } else {
        w[b.1]
    };
    let off = q - w[a.0];
    d1.cross(off).abs() > tol * d1.norm() * off.norm()
}

/// One critical direction together with every vertex pair tied there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalAngle {
    pub theta: f64,
    pub pairs: Vec<(usize, usize)>,
}

/// Sorted directions in `[0, 2π)` at which two vertices have equal height.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalAngleSet {
    pub angles: Vec<CriticalAngle>,
}

impl CriticalAngleSet {
    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn thetas(&self) -> Vec<f64> {
        self.angles.iter().map(|a| a.theta).collect()
    }
}

/// Every direction orthogonal to some `w_j - w_i`, merged within `tol`.
pub fn critical_angles(p: &Polygon, tol: f64) -> CriticalAngleSet {
    let w = p.vertices();
    let n = w.len();
    let mut raw: Vec<(f64, (usize, usize))> = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in i + 1..n {
            let d = w[j] - w[i];
            let base = d.y.atan2(d.x);
            raw.push((normalize_angle(base + FRAC_PI_2), (i, j)));
            raw.push((normalize_angle(base - FRAC_PI_2), (i, j)));
        }
    }
    raw.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut angles: Vec<CriticalAngle> = Vec::new();
    for (theta, pair) in raw {
        match angles.last_mut() {
            Some(last) if theta - last.theta <= tol => {
                if !last.pairs.contains(&pair) {
                    last.pairs.push(pair);
                }
            }
            _ => angles.push(CriticalAngle {
                theta,
                pairs: vec![pair],
            }),
        }
    }
    // merge across the 0 / 2π seam
    if angles.len() > 1 {
        let last = angles.len() - 1;
        if angles[0].theta + TAU - angles[last].theta <= tol {
            let tail = angles.pop().expect("nonempty");
            for pair in tail.pairs {
                if !angles[0].pairs.contains(&pair) {
                    angles[0].pairs.push(pair);
                }
            }
        }
    }
    for a in &mut angles {
        a.pairs.sort_unstable();
    }
    CriticalAngleSet { angles }
}
