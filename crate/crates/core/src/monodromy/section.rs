use std::f64::consts::TAU;

use serde::Serialize;

use crate::geometry::{normalize_angle, Direction, Point, Polygon};
use crate::persistence::DiagramPoint;
use crate::pht::DirectionPlan;

use super::stitch::{stitch, Pairing};
use super::total::{total_space, TotalSpace};
use super::MonodromyError;

/// Halvings of the stitching offset before giving up.
pub const MAX_HALVINGS: usize = 40;
/// Hinge points this close to the diagonal, relative to the largest vertex
/// norm, are rounding residue of a class that dies at the event.
pub const HINGE_FLOOR: f64 = 1e-9;

type Label = (Option<usize>, Option<usize>);

/// A section restricted to one arc: a fixed birth vertex and death vertex
/// (none for the essential class), evaluated in closed form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Segment {
    pub arc: usize,
    pub start: f64,
    pub end: f64,
    pub birth_vertex: usize,
    pub death_vertex: Option<usize>,
    pub birth_point: Point,
    pub death_point: Option<Point>,
}

impl Segment {
    pub fn eval(&self, theta: f64) -> DiagramPoint {
        let v = Direction::new(theta);
        match self.death_point {
            Some(d) => DiagramPoint::finite(
                v.height(self.birth_point),
                v.height(d),
                Some(self.birth_vertex),
                self.death_vertex,
            ),
            None => DiagramPoint::essential(v.height(self.birth_point), Some(self.birth_vertex)),
        }
    }

    /// Whether `theta` lies strictly inside this segment's arc.
    pub fn covers(&self, theta: f64) -> bool {
        let off = (theta - self.start).rem_euclid(TAU);
        off > 0.0 && off < self.end - self.start
    }
}

/// Where a section is off the diagonal: the open arc from `start` to `end`
/// travelling counter-clockwise, or the whole circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Support {
    pub start: f64,
    pub end: f64,
    pub length: f64,
    pub full_circle: bool,
    pub wraps: bool,
}

impl Support {
    pub fn contains(&self, theta: f64) -> bool {
        if self.full_circle {
            return true;
        }
        let off = (theta - self.start).rem_euclid(TAU);
        off > 0.0 && off < self.length
    }
}

/// One connected component of the stitched total space.
///
/// `segments` follow the component counter-clockwise. A component that runs
/// more than once around the circle visits some arcs twice and is not the
/// graph of a function; the monodromy decision reports it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub id: usize,
    pub essential: bool,
    /// Component closes up on itself instead of ending on the diagonal.
    pub closed: bool,
    pub support: Support,
    pub segments: Vec<Segment>,
}

impl Section {
    /// Values at `theta` (several if the component winds past itself).
    pub fn values_at(&self, theta: f64) -> Vec<DiagramPoint> {
        self.segments
            .iter()
            .filter(|s| s.covers(theta))
            .map(|s| s.eval(theta))
            .collect()
    }

    pub fn value_at(&self, theta: f64) -> Option<DiagramPoint> {
        self.values_at(theta).into_iter().next()
    }

    /// Polygon vertices named by any segment label.
    pub fn vertex_labels(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .segments
            .iter()
            .flat_map(|s| std::iter::once(s.birth_vertex).chain(s.death_vertex))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Stitch the bundle of `p` into sections.
pub fn build_sections(
    p: &Polygon,
    plan: &DirectionPlan,
    tol: f64,
) -> Result<Vec<Section>, MonodromyError> {
    sections_from(&total_space(p, plan, tol)?)
}

/// Sections of an already sampled total space. The essential class comes
/// first, then components in order of their first arc.
pub fn sections_from(total: &TotalSpace) -> Result<Vec<Section>, MonodromyError> {
    let plan = &total.plan;
    let m = plan.arcs.len();
    let labels: Vec<Vec<Label>> = (0..m)
        .map(|a| {
            total
                .midpoint_fiber(a)
                .reduced()
                .points()
                .iter()
                .map(|q| (q.birth_vertex, q.death_vertex))
                .collect()
        })
        .collect();
    let delta0 = plan.min_arc_length() / 4.0;
    // next[a][i]: node in arc a + 1 continuing node i of arc a.
    let mut next: Vec<Vec<Option<usize>>> = labels.iter().map(|l| vec![None; l.len()]).collect();
    let mut has_prev: Vec<Vec<bool>> = labels.iter().map(|l| vec![false; l.len()]).collect();
    for a in 0..m {
        let b = (a + 1) % m;
        let theta_c = plan.arcs[a].end;
        let (left, right, pairing) = stitch_event(total, theta_c, delta0)?;
        let index =
            |side: &[DiagramPoint], k: usize, arc: usize| -> Result<usize, MonodromyError> {
                let key = (side[k].birth_vertex, side[k].death_vertex);
                labels[arc]
                    .iter()
                    .position(|&l| l == key)
                    .ok_or(MonodromyError::LabelDrift {
                        theta: normalize_angle(theta_c),
                    })
            };
        for &(l, r) in &pairing.pairs {
            let (i, j) = (index(&left, l, a)?, index(&right, r, b)?);
            next[a][i] = Some(j);
            has_prev[b][j] = true;
        }
        if left.len() != labels[a].len() || right.len() != labels[b].len() {
            return Err(MonodromyError::LabelDrift {
                theta: normalize_angle(theta_c),
            });
        }
    }

    let poly = &total.polygon;
    let segment = |arc: usize, (bv, dv): Label| -> Segment {
        let bv = bv.expect("lower-star points carry vertex labels");
        Segment {
            arc,
            start: plan.arcs[arc].start,
            end: plan.arcs[arc].end,
            birth_vertex: bv,
            death_vertex: dv,
            birth_point: poly.vertex(bv),
            death_point: dv.map(|d| poly.vertex(d)),
        }
    };

    let mut sections = vec![essential_section(total, &segment)];
    let mut seen: Vec<Vec<bool>> = labels.iter().map(|l| vec![false; l.len()]).collect();
    let walk = |a0: usize, i0: usize, seen: &mut Vec<Vec<bool>>, sections: &mut Vec<Section>| {
        let (mut a, mut i) = (a0, i0);
        let mut segs = Vec::new();
        let closed = loop {
            seen[a][i] = true;
            segs.push(segment(a, labels[a][i]));
            match next[a][i] {
                None => break false,
                Some(j) => {
                    a = (a + 1) % m;
                    i = j;
                    if (a, i) == (a0, i0) {
                        break true;
                    }
                }
            }
        };
        let id = sections.len();
        sections.push(Section {
            id,
            essential: false,
            closed,
            support: support_of(&segs, closed, m),
            segments: segs,
        });
    };
    for a in 0..m {
        for i in 0..labels[a].len() {
            if !has_prev[a][i] && !seen[a][i] {
                walk(a, i, &mut seen, &mut sections);
            }
        }
    }
    for a in 0..m {
        for i in 0..labels[a].len() {
            if !seen[a][i] {
                walk(a, i, &mut seen, &mut sections);
            }
        }
    }
    Ok(sections)
}

fn essential_section(total: &TotalSpace, segment: &impl Fn(usize, Label) -> Segment) -> Section {
    let m = total.arc_count();
    let segments: Vec<Segment> = (0..m)
        .map(|a| {
            let e = total
                .midpoint_fiber(a)
                .diagram
                .essential()
                .next()
                .copied()
                .expect("every diagram has an essential class");
            segment(a, (e.birth_vertex, None))
        })
        .collect();
    Section {
        id: 0,
        essential: true,
        closed: true,
        support: support_of(&segments, true, m),
        segments,
    }
}

fn support_of(segs: &[Segment], closed: bool, m: usize) -> Support {
    let start = normalize_angle(segs[0].start);
    let end = normalize_angle(segs[segs.len() - 1].end);
    let length: f64 = segs.iter().map(|s| s.end - s.start).sum();
    let full_circle = closed || segs.len() > m;
    Support {
        start,
        end,
        length: length.min(TAU),
        full_circle,
        wraps: !full_circle && end <= start,
    }
}

/// Finite diagrams just before and after `theta_c` and their pairing,
/// shrinking the offset until the pairing is unambiguous.
fn stitch_event(
    total: &TotalSpace,
    theta_c: f64,
    delta0: f64,
) -> Result<(Vec<DiagramPoint>, Vec<DiagramPoint>, Pairing), MonodromyError> {
    let finite =
        |theta: f64| -> Vec<DiagramPoint> { total.diagram_at(theta).finite().copied().collect() };
    let hinge = finite(theta_c);
    let floor = HINGE_FLOOR * total.lipschitz;
    let mut delta = delta0;
    for _ in 0..=MAX_HALVINGS {
        let left = finite(theta_c - delta);
        let right = finite(theta_c + delta);
        if let Some(p) = stitch(&left, &hinge, &right, 2.0 * total.lipschitz * delta, floor) {
            return Ok((left, right, p));
        }
        delta *= 0.5;
    }
    Err(MonodromyError::AmbiguousStitch {
        theta: normalize_angle(theta_c),
    })
}
