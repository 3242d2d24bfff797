use rayon::prelude::*;
use serde::Serialize;

use crate::geometry::{Direction, Polygon};
use crate::persistence::{lower_star_diagram, triangulate, PersistenceDiagram, Triangulation};
use crate::pht::{is_simple_dgm0, DirectionPlan};

use super::MonodromyError;

/// Diagram over one sample direction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fiber {
    pub theta: f64,
    pub arc: usize,
    pub diagram: PersistenceDiagram,
}

impl Fiber {
    /// Off-diagonal part with the essential class removed.
    pub fn reduced(&self) -> PersistenceDiagram {
        self.diagram.finite().copied().collect()
    }
}

/// Labelled diagrams over every sample of a plan, in plan order.
#[derive(Clone, Debug)]
pub struct TotalSpace {
    pub plan: DirectionPlan,
    pub lipschitz: f64,
    pub fibers: Vec<Fiber>,
    pub(crate) polygon: Polygon,
    pub(crate) triangulation: Triangulation,
}

impl TotalSpace {
    pub fn arc_count(&self) -> usize {
        self.plan.arcs.len()
    }

    /// Labelled diagram at any direction, computed on demand.
    pub fn diagram_at(&self, theta: f64) -> PersistenceDiagram {
        lower_star_diagram(&self.triangulation, Direction::new(theta))
    }

    /// Fiber at the midpoint of `arc`.
    pub fn midpoint_fiber(&self, arc: usize) -> &Fiber {
        &self.fibers[self.plan.midpoint_sample(arc)]
    }
}

/// Sample the diagram bundle of `p`, refusing non-simple bundles.
pub fn total_space(
    p: &Polygon,
    plan: &DirectionPlan,
    tol: f64,
) -> Result<TotalSpace, MonodromyError> {
    let report = is_simple_dgm0(p, plan, tol)?;
    if let Some(witness) = report.witness {
        return Err(MonodromyError::NotSimple { witness });
    }
    let triangulation = triangulate(p)?;
    let fibers = plan
        .samples
        .par_iter()
        .map(|s| Fiber {
            theta: s.theta,
            arc: s.arc,
            diagram: lower_star_diagram(&triangulation, Direction::new(s.theta)),
        })
        .collect();
    Ok(TotalSpace {
        plan: plan.clone(),
        lipschitz: p.max_norm(),
        fibers,
        polygon: p.clone(),
        triangulation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{arrowhead, bundled_spiral, twin_prongs, unit_square};
    use crate::pht::plan_directions;

    #[test]
    fn square_reduced_empty() {
        let p = unit_square();
        let t = total_space(&p, &plan_directions(&p, 0), 1e-9).unwrap();
        assert!(t.fibers.iter().all(|f| f.reduced().is_empty()));
    }

    #[test]
    fn arrowhead_notch_only_downward() {
        let p = arrowhead();
        let t = total_space(&p, &plan_directions(&p, 0), 1e-9).unwrap();
        for f in &t.fibers {
            let v = Direction::new(f.theta).unit();
            // Two lower tips exist exactly when both top corners lie below the notch.
            let tips = v.dot((4.0, 3.0).into()) < v.dot((2.0, 1.0).into())
                && v.dot((0.0, 3.0).into()) < v.dot((2.0, 1.0).into());
            assert_eq!(f.reduced().len(), usize::from(tips), "theta {}", f.theta);
        }
    }

    #[test]
    fn spiral_always_has_second_component() {
        let p = bundled_spiral();
        let t = total_space(&p, &plan_directions(&p, 0), 1e-9).unwrap();
        assert!(t.fibers.iter().all(|f| !f.reduced().is_empty()));
    }

    #[test]
    fn twin_prongs_not_simple() {
        let p = twin_prongs();
        assert!(matches!(
            total_space(&p, &plan_directions(&p, 0), 1e-9),
            Err(MonodromyError::NotSimple { .. })
        ));
    }
}
