//! The transform itself: direction plans, sampled diagrams, the sector
//! decomposition check, simplicity and the stability audit.

mod decompose;
mod plan;
mod simple;
mod transform;
mod trivial;

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::persistence::PersistenceError;

pub use decompose::{decompose_check, DecompositionRecord, DecompositionReport};
pub use plan::{plan_directions, sample_offsets, Arc, DirectionPlan, Sample};
pub use simple::{
    is_simple_dgm0, sampled_collision, simplicity_probes, SimplicityReport, SimplicityStage,
    SimplicityWitness,
};
pub use transform::{
    pht, pht_at, stability_audit, PhtEntry, PhtSample, StabilityPair, StabilityReport,
};
pub use trivial::sector_trivial_direction;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PhtError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Persistence(#[from] PersistenceError),
    #[error("stability audit needs at least two samples, got {count}")]
    TooFewSamples { count: usize },
    #[error("sector {sector} is not trivialised by its perpendicular direction")]
    TrivialDirectionFailed { sector: usize },
}
