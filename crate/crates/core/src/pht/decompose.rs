use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::{convex_hull, sectors, Direction, Point, Polygon};
use crate::persistence::{
    bottleneck_no_diagonal, lower_star_diagram, sector_diagram, triangulate, PersistenceDiagram,
};

use super::plan::DirectionPlan;
use super::PhtError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionRecord {
    pub theta: f64,
    /// Reduced diagram of the whole polygon.
    pub shape: PersistenceDiagram,
    /// Multiset union of the reduced sector diagrams.
    pub sectors: PersistenceDiagram,
    /// Bottleneck distance between the two with diagonal matching disabled.
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub center: Point,
    pub tol: f64,
    pub sector_count: usize,
    pub records: Vec<DecompositionRecord>,
    pub max_gap: f64,
    pub verdict: bool,
}

/// Compare the reduced diagram of `p` with the union of its sectors' reduced
/// diagrams at every sample and critical angle of `plan`.
///
/// The two sides are computed independently: the polygon by the lower-star
/// sweep over a triangulation, each sector by the clamped boundary sweep.
pub fn decompose_check(
    p: &Polygon,
    c: Point,
    plan: &DirectionPlan,
    tol: f64,
) -> Result<DecompositionReport, PhtError> {
    let secs = sectors(p, c, &convex_hull(p))?;
    let tri = triangulate(p)?;
    let records = plan
        .all_angles()
        .into_par_iter()
        .map(|theta| {
            let v = Direction::new(theta);
            let shape = lower_star_diagram(&tri, v).reduce()?;
            let mut union = PersistenceDiagram::empty();
            for s in &secs {
                union = union.union(&sector_diagram(s, v).reduce()?);
            }
            let (gap, _) = bottleneck_no_diagonal(&shape, &union);
            Ok(DecompositionRecord {
                theta,
                shape,
                sectors: union,
                gap,
            })
        })
        .collect::<Result<Vec<_>, PhtError>>()?;
    let max_gap = records.iter().map(|r| r.gap).fold(0.0, f64::max);
    Ok(DecompositionReport {
        center: c,
        tol,
        sector_count: secs.len(),
        verdict: records.iter().all(|r| r.gap <= tol),
        records,
        max_gap,
    })
}
