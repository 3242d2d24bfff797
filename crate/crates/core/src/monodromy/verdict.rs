use serde::Serialize;

use crate::geometry::normalize_angle;
use crate::persistence::{multiset_equal, ser_death, DiagramPoint, PersistenceDiagram};

use super::section::Section;
use super::total::TotalSpace;

/// A component followed once around the circle, from `start` to a
/// different point `end` of the same diagram.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WitnessLoop {
    pub section_id: usize,
    pub theta: f64,
    pub start: DiagramPoint,
    pub end: DiagramPoint,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonodromyVerdict {
    pub trivial: bool,
    /// Section values reproduce the diagram at every sample.
    pub covering: bool,
    pub sections: Vec<Section>,
    pub witness_loop: Option<WitnessLoop>,
}

/// Decide whether the sections exhibit trivial geometric monodromy.
///
/// Every non-essential component must return to itself after one turn (it
/// spans at most one turn of arcs), and the section values at each sample
/// must equal that sample's diagram within `tol`.
pub fn monodromy_decision(
    sections: Vec<Section>,
    total: &TotalSpace,
    tol: f64,
) -> MonodromyVerdict {
    let m = total.arc_count();
    let witness_loop = sections
        .iter()
        .filter(|s| !s.essential && s.segments.len() > m)
        .map(|s| {
            let first = &s.segments[0];
            let theta = total.plan.arcs[first.arc].at(0.5);
            WitnessLoop {
                section_id: s.id,
                theta,
                start: first.eval(theta),
                end: s.segments[m].eval(theta),
            }
        })
        .next();
    let covering = covering_holds(&sections, total, tol);
    MonodromyVerdict {
        trivial: witness_loop.is_none() && covering,
        covering,
        sections,
        witness_loop,
    }
}

/// Whether the sections' values form exactly the sampled diagrams.
pub fn covering_holds(sections: &[Section], total: &TotalSpace, tol: f64) -> bool {
    total.fibers.iter().all(|f| {
        let values: PersistenceDiagram =
            sections.iter().flat_map(|s| s.values_at(f.theta)).collect();
        multiset_equal(&values, &f.diagram, tol)
    })
}

/// One row of a sampled vine.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VineRecord {
    pub section_id: usize,
    pub theta: f64,
    pub birth: f64,
    #[serde(serialize_with = "ser_death")]
    pub death: f64,
    pub birth_vertex: usize,
    pub death_vertex: Option<usize>,
    pub essential: bool,
}

/// Sample each segment at its two ends and its midpoint.
pub fn export_vines(sections: &[Section]) -> Vec<VineRecord> {
    let mut rows = Vec::new();
    for s in sections {
        for seg in &s.segments {
            for t in [0.0, 0.5, 1.0] {
                let theta = seg.start + t * (seg.end - seg.start);
                let q = seg.eval(theta);
                rows.push(VineRecord {
                    section_id: s.id,
                    theta: normalize_angle(theta),
                    birth: q.birth,
                    death: q.death,
                    birth_vertex: seg.birth_vertex,
                    death_vertex: seg.death_vertex,
                    essential: s.essential,
                });
            }
        }
    }
    rows
}
