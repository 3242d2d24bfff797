//! Sections of the diagram bundle over the circle and the monodromy
//! decision.

mod section;
mod stitch;
mod total;
mod verdict;

use thiserror::Error;

use crate::geometry::Polygon;
use crate::persistence::PersistenceError;
use crate::pht::{DirectionPlan, PhtError, SimplicityWitness};

pub use section::{
    build_sections, sections_from, Section, Segment, Support, HINGE_FLOOR, MAX_HALVINGS,
};
pub use stitch::{stitch, Pairing};
pub use total::{total_space, Fiber, TotalSpace};
pub use verdict::{
    covering_holds, export_vines, monodromy_decision, MonodromyVerdict, VineRecord, WitnessLoop,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MonodromyError {
    #[error("diagram at theta = {} has a repeated point ({}, {})", witness.theta, witness.point.birth, witness.point.death)]
    NotSimple { witness: SimplicityWitness },
    #[error("could not pair diagram points across theta = {theta}")]
    AmbiguousStitch { theta: f64 },
    #[error("diagram labels near theta = {theta} differ from the rest of the arc")]
    LabelDrift { theta: f64 },
    #[error(transparent)]
    Pht(#[from] PhtError),
    #[error(transparent)]
    Persistence(#[from] PersistenceError),
}

/// Sample, stitch and decide in one call.
pub fn analyze(
    p: &Polygon,
    plan: &DirectionPlan,
    tol: f64,
) -> Result<(TotalSpace, MonodromyVerdict), MonodromyError> {
    let total = total_space(p, plan, tol)?;
    let sections = sections_from(&total)?;
    let verdict = monodromy_decision(sections, &total, tol);
    Ok((total, verdict))
}
