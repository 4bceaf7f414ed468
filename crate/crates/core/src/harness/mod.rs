//! Configuration, sweeps, figure presets and dataset output.

mod config;
mod dataset;
mod figures;
pub mod registry;
mod sweep;

pub use config::{load_config, parse_config, Format, RunConfig, Scale, SweepSpec};
pub use dataset::{fmt_num, Cell, Column, Dataset, Provenance};
pub use figures::{figure_command, FIGURES};
pub use sweep::{cooperativity_grid, entanglement_dataset, fidelity_dataset, rates_dataset, run_sweep, spectrum_dataset, Exec};

use crate::error::Error;

/// Harness failures, each mapped to a process exit code.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RunError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid `{field}`: {reason}")]
    Validation { field: String, reason: String },
    #[error("{0}")]
    Runtime(String),
}

impl RunError {
    pub fn validation(field: &str, reason: impl Into<String>) -> Self {
        RunError::Validation {
            field: field.to_string(),
            reason: reason.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse(_) => 2,
            RunError::Validation { .. } => 3,
            RunError::Runtime(_) => 4,
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter { field, reason } => RunError::Validation { field, reason },
            Error::OutOfRange { ref field, .. } => RunError::validation(field, e.to_string()),
            other => RunError::Runtime(other.to_string()),
        }
    }
}
