//! Error type for the reference-implementation layer.

use thiserror::Error;

/// Failures of the brute-force reference routines.
///
/// These routines exist to check other code, so they are strict: any
/// precondition violation or unexpectedly large residual is an error, never
/// a silent best-effort answer.
#[derive(Debug, Error)]
pub enum OracleError {
    /// A matrix claimed as a group element has determinant away from 1.
    #[error("matrix is not unimodular (|det − 1| = {residual:.3e})")]
    NotUnimodular {
        /// `|det M − 1|`.
        residual: f64,
    },

    /// A matrix claimed as an algebra element has a non-zero trace.
    #[error("matrix is not traceless (|tr| = {residual:.3e})")]
    NotTraceless {
        /// `|tr M|`.
        residual: f64,
    },

    /// A constructed factorization or decomposition does not reproduce its
    /// input to the required accuracy.
    #[error("{what} residual {residual:.3e} exceeds its bound")]
    ResidualTooLarge {
        /// Which reconstruction failed.
        what: &'static str,
        /// Max-abs reconstruction error.
        residual: f64,
    },

    /// Structure constants failed an algebraic identity they must satisfy.
    #[error("invalid structure constants: {reason}")]
    InvalidStructureConstants {
        /// Which identity failed and by how much.
        reason: String,
    },

    /// A finite-difference step that cannot work (non-positive or
    /// non-finite).
    #[error("invalid finite-difference step {h}")]
    InvalidStep {
        /// The offending step.
        h: f64,
    },

    /// The reference integration produced a non-finite component.
    #[error("non-finite state at step {step} (t = {t})")]
    NonFinite {
        /// 1-based index of the step that produced the bad value.
        step: usize,
        /// Time at the end of that step.
        t: f64,
    },

    /// Errors bubbled up from the concrete-group layer (chart validation,
    /// shape checks).
    #[error(transparent)]
    Group(#[from] bowtie_sl2c::Sl2cError),

    /// Errors bubbled up from the dynamics layer (Legendre transforms,
    /// dimension checks).
    #[error(transparent)]
    Dynamics(#[from] bowtie_dynamics::DynamicsError),
}
