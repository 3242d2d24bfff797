use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::{is_general_position, Direction, Polygon, PARALLEL_TOL};
use crate::persistence::{lower_star_diagram, triangulate, DiagramPoint};

use super::plan::DirectionPlan;
use super::PhtError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimplicityStage {
    GeneralPosition,
    Sampled,
}

/// A direction whose diagram holds a repeated off-diagonal point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimplicityWitness {
    pub theta: f64,
    pub point: DiagramPoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimplicityReport {
    pub simple: bool,
    pub stage: SimplicityStage,
    pub witness: Option<SimplicityWitness>,
}

/// Directions probed by the sampled check: every sample, every critical
/// angle, and each critical angle shifted by a quarter of the shortest arc
/// to either side.
pub fn simplicity_probes(plan: &DirectionPlan) -> Vec<f64> {
    let delta = plan.min_arc_length() / 4.0;
    let mut out = plan.sample_thetas();
    for t in plan.critical_thetas() {
        out.extend([t - delta, t, t + delta]);
    }
    out
}

/// Decide whether no diagram of `p` has an off-diagonal point of
/// multiplicity two or more.
///
/// Polygons in general position pass immediately. Otherwise the diagrams at
/// [`simplicity_probes`] are searched for finite points within `tol` of each
/// other; the first such direction in probe order is the witness.
pub fn is_simple_dgm0(
    p: &Polygon,
    plan: &DirectionPlan,
    tol: f64,
) -> Result<SimplicityReport, PhtError> {
    if is_general_position(p, PARALLEL_TOL).0 {
        return Ok(SimplicityReport {
            simple: true,
            stage: SimplicityStage::GeneralPosition,
            witness: None,
        });
    }
    Ok(SimplicityReport {
        simple: false,
        stage: SimplicityStage::Sampled,
        witness: None,
    }
    .with_witness(sampled_collision(p, &simplicity_probes(plan), tol)?))
}

/// The sampled stage alone, at the given directions.
pub fn sampled_collision(
    p: &Polygon,
    thetas: &[f64],
    tol: f64,
) -> Result<Option<SimplicityWitness>, PhtError> {
    let tri = triangulate(p)?;
    let hits: Vec<Option<SimplicityWitness>> = thetas
        .par_iter()
        .map(|&theta| {
            let d = lower_star_diagram(&tri, Direction::new(theta));
            let fin: Vec<&DiagramPoint> = d.finite().collect();
            for (i, a) in fin.iter().enumerate() {
                if fin[i + 1..].iter().any(|b| a.linf(b) <= tol) {
                    return Some(SimplicityWitness {
                        theta: Direction::new(theta).theta(),
                        point: **a,
                    });
                }
            }
            None
        })
        .collect();
    Ok(hits.into_iter().flatten().next())
}

impl SimplicityReport {
    fn with_witness(mut self, w: Option<SimplicityWitness>) -> Self {
        self.simple = w.is_none();
        self.witness = w;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{perturbed_arrowhead, regular_ngon, twin_prongs, unit_square};
    use crate::pht::plan::plan_directions;
    use std::f64::consts::PI;

    #[test]
    fn perturbed_arrowhead_by_general_position() {
        let p = perturbed_arrowhead();
        let r = is_simple_dgm0(&p, &plan_directions(&p, 0), 1e-9).unwrap();
        assert!(r.simple);
        assert_eq!(r.stage, SimplicityStage::GeneralPosition);
    }

    #[test]
    fn square_by_sampling() {
        let p = unit_square();
        let r = is_simple_dgm0(&p, &plan_directions(&p, 0), 1e-9).unwrap();
        assert!(r.simple);
        assert_eq!(r.stage, SimplicityStage::Sampled);
        let hex = regular_ngon(6).unwrap();
        assert!(
            is_simple_dgm0(&hex, &plan_directions(&hex, 0), 1e-9)
                .unwrap()
                .simple
        );
    }

    #[test]
    fn twin_prongs_collide_pointing_down() {
        let p = twin_prongs();
        let r = is_simple_dgm0(&p, &plan_directions(&p, 0), 1e-9).unwrap();
        assert!(!r.simple);
        let w = r.witness.unwrap();
        assert!((w.theta - 1.5 * PI).abs() < 1e-12);
        assert!((w.point.birth + 3.0).abs() < 1e-12);
        assert!((w.point.death + 1.5).abs() < 1e-12);
    }
}
