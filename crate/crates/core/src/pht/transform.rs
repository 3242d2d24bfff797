use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::{Direction, Point, Polygon};
use crate::persistence::{
    bottleneck, boundary_sweep_diagram, lower_star_diagram, triangulate, PersistenceDiagram,
};

use super::plan::DirectionPlan;
use super::PhtError;

/// Diagram at one direction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhtEntry {
    #[serde(rename = "direction")]
    pub theta: f64,
    #[serde(flatten)]
    pub diagram: PersistenceDiagram,
}

/// Sampled persistent homology transform.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhtSample {
    pub entries: Vec<PhtEntry>,
    /// Largest vertex norm: the Lipschitz constant of `v ↦ Dgm(v)`.
    pub lipschitz: f64,
}

/// Diagrams at the plan's critical angles and samples, in angular order.
///
/// With `center` set the clamped boundary sweep is used (star-shaped
/// polygons only); otherwise the lower-star sweep on a triangulation.
pub fn pht(
    p: &Polygon,
    plan: &DirectionPlan,
    center: Option<Point>,
) -> Result<PhtSample, PhtError> {
    pht_at(p, &plan.all_angles(), center)
}

/// Diagrams at arbitrary directions.
pub fn pht_at(p: &Polygon, thetas: &[f64], center: Option<Point>) -> Result<PhtSample, PhtError> {
    let entries = match center {
        Some(c) => thetas
            .par_iter()
            .map(|&theta| {
                Ok(PhtEntry {
                    theta,
                    diagram: boundary_sweep_diagram(p, c, Direction::new(theta))?,
                })
            })
            .collect::<Result<Vec<_>, PhtError>>()?,
        None => {
            let t = triangulate(p)?;
            thetas
                .par_iter()
                .map(|&theta| PhtEntry {
                    theta,
                    diagram: lower_star_diagram(&t, Direction::new(theta)),
                })
                .collect()
        }
    };
    Ok(PhtSample {
        entries,
        lipschitz: p.max_norm(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityPair {
    pub from: f64,
    pub to: f64,
    pub gap: f64,
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityReport {
    pub pairs: Vec<StabilityPair>,
    /// Largest `gap / (K · ‖u − v‖)` over pairs with distinct directions.
    pub worst_ratio: f64,
    pub holds: bool,
}

/// Check `d_B(Dgm(u), Dgm(v)) <= K‖u − v‖ + tol` for every cyclically
/// adjacent pair of entries.
pub fn stability_audit(s: &PhtSample, tol: f64) -> Result<StabilityReport, PhtError> {
    let n = s.entries.len();
    if n < 2 {
        return Err(PhtError::TooFewSamples { count: n });
    }
    let pairs: Vec<StabilityPair> = (0..n)
        .into_par_iter()
        .filter(|&i| n > 2 || i == 0)
        .map(|i| {
            let a = &s.entries[i];
            let b = &s.entries[(i + 1) % n];
            let (gap, _) = bottleneck(&a.diagram, &b.diagram);
            let dist = Direction::new(a.theta).chord(Direction::new(b.theta));
            StabilityPair {
                from: a.theta,
                to: b.theta,
                gap,
                bound: s.lipschitz * dist,
            }
        })
        .collect();
    let worst_ratio = pairs
        .iter()
        .filter(|p| p.bound > 0.0)
        .map(|p| p.gap / p.bound)
        .fold(0.0, f64::max);
    let holds = pairs.iter().all(|p| p.gap <= p.bound + tol);
    Ok(StabilityReport {
        pairs,
        worst_ratio,
        holds,
    })
}
