use std::f64::consts::TAU;

use serde::Serialize;

use crate::geometry::{critical_angles, normalize_angle, CriticalAngleSet, Polygon, ANGLE_TOL};

/// Open interval of directions between two consecutive critical angles.
/// `end > start`; `end` exceeds `2π` for the arc that wraps past zero.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Arc {
    pub start: f64,
    pub end: f64,
}

impl Arc {
    pub fn length(&self) -> f64 {
        self.end - self.start
    }

    /// Direction at fraction `t` of the way along the arc, in `[0, 2π)`.
    pub fn at(&self, t: f64) -> f64 {
        normalize_angle(self.start + t * self.length())
    }

    /// Whether `theta` lies strictly inside the arc (modulo 2π).
    pub fn contains(&self, theta: f64) -> bool {
        let off = (theta - self.start).rem_euclid(TAU);
        off > 0.0 && off < self.length()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Sample {
    pub theta: f64,
    pub arc: usize,
}

/// Critical angles, the arcs between them and sample directions on each arc.
///
/// Arc `i` runs from critical angle `i` to critical angle `i + 1`; samples
/// are listed arc by arc, so their order follows the circle starting at the
/// first critical angle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectionPlan {
    pub critical: CriticalAngleSet,
    pub arcs: Vec<Arc>,
    pub samples: Vec<Sample>,
    pub refinement: usize,
}

impl DirectionPlan {
    pub fn critical_thetas(&self) -> Vec<f64> {
        self.critical.thetas()
    }

    pub fn sample_thetas(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.theta).collect()
    }

    /// Samples and critical angles together, sorted in `[0, 2π)`.
    pub fn all_angles(&self) -> Vec<f64> {
        let mut all = self.sample_thetas();
        all.extend(self.critical_thetas());
        all.sort_by(f64::total_cmp);
        all
    }

    pub fn samples_in_arc(&self, arc: usize) -> impl Iterator<Item = &Sample> {
        self.samples.iter().filter(move |s| s.arc == arc)
    }

    /// Index of the midpoint sample of each arc.
    pub fn midpoint_sample(&self, arc: usize) -> usize {
        let mid = self.arcs[arc].at(0.5);
        self.samples
            .iter()
            .position(|s| s.arc == arc && s.theta == mid)
            .expect("every arc has its midpoint sampled")
    }

    pub fn min_arc_length(&self) -> f64 {
        self.arcs
            .iter()
            .map(Arc::length)
            .fold(f64::INFINITY, f64::min)
    }
}

/// Fractions along an arc for refinement `r`: `r + 1` evenly spaced
/// interior points, with the one nearest the middle moved onto it when `r`
/// is odd.
pub fn sample_offsets(refinement: usize) -> Vec<f64> {
    let denom = (refinement + 2) as f64;
    let mut offs: Vec<f64> = (0..=refinement).map(|j| (j + 1) as f64 / denom).collect();
    if refinement % 2 == 1 {
        offs[(refinement - 1) / 2] = 0.5;
    }
    offs
}

pub fn plan_directions(p: &Polygon, refinement: usize) -> DirectionPlan {
    let critical = critical_angles(p, ANGLE_TOL);
    let thetas = critical.thetas();
    let m = thetas.len();
    let arcs: Vec<Arc> = (0..m)
        .map(|i| Arc {
            start: thetas[i],
            end: if i + 1 < m {
                thetas[i + 1]
            } else {
                thetas[0] + TAU
            },
        })
        .collect();
    let offsets = sample_offsets(refinement);
    let samples = arcs
        .iter()
        .enumerate()
        .flat_map(|(i, arc)| {
            offsets.iter().map(move |&t| Sample {
                theta: arc.at(t),
                arc: i,
            })
        })
        .collect();
    DirectionPlan {
        critical,
        arcs,
        samples,
        refinement,
    }
}
