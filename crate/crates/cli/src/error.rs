use std::path::PathBuf;

use pht_core::corpus::CorpusError;
use pht_core::monodromy::MonodromyError;
use pht_core::persistence::PersistenceError;
use pht_core::pht::PhtError;
use pht_core::GeometryError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("invalid shape: {0}")]
    Geometry(#[from] GeometryError),
    #[error("{0}")]
    Corpus(#[from] CorpusError),
    #[error("{0}")]
    Persistence(#[from] PersistenceError),
    #[error("{0}")]
    Pht(#[from] PhtError),
    #[error("{0}")]
    Monodromy(#[from] MonodromyError),
    #[error("{0}")]
    Input(String),
    /// A requested predicate does not hold.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) | CliError::Monodromy(MonodromyError::NotSimple { .. }) => 1,
            _ => 2,
        }
    }
}
