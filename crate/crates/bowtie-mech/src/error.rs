//! Front-end errors, mapped onto the process exit codes the batch
//! interface promises: 0 ok, 2 usage/config, 3 numerical failure.

use std::path::PathBuf;

use bowtie_dynamics::DynamicsError;
use thiserror::Error;

/// Anything that can go wrong while serving a subcommand.
#[derive(Debug, Error)]
pub enum MechError {
    /// Unusable input: missing or malformed config, schema violation,
    /// unknown system name, bad tolerance override.
    #[error("{0}")]
    Config(String),

    /// Filesystem trouble on an input or output path.
    #[error("{path}: {source}")]
    Io {
        /// The offending path.
        path: PathBuf,
        /// The underlying error.
        source: std::io::Error,
    },

    /// The integration produced a non-finite state and aborted.
    #[error("numerical abort: {0}")]
    Numerical(String),
}

impl MechError {
    /// Exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            MechError::Config(_) | MechError::Io { .. } => 2,
            MechError::Numerical(_) => 3,
        }
    }

    /// Classifies an integration-layer error: a non-finite abort is a
    /// numerical failure (exit 3), anything else means the run was set up
    /// inconsistently (exit 2).
    pub fn from_dynamics(e: DynamicsError) -> Self {
        match e {
            DynamicsError::NonFinite { .. } => MechError::Numerical(e.to_string()),
            other => MechError::Config(other.to_string()),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, MechError>;
