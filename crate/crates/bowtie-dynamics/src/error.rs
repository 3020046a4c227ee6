//! Error type for the dynamics layer.

use bowtie_algebra::AlgebraError;

/// Errors produced while setting up or integrating reduced dynamics.
#[derive(Debug, thiserror::Error)]
pub enum DynamicsError {
    /// An inertia matrix is not square, not symmetric, or not positive
    /// definite.
    #[error("invalid inertia matrix ({which}): {reason}")]
    InvalidInertia {
        /// Which inertia block was rejected (`"I1"` or `"I2"`).
        which: &'static str,
        /// Human-readable reason.
        reason: String,
    },

    /// State or momentum dimensions do not match the Lagrangian or the
    /// structure.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        /// Operation being attempted.
        context: &'static str,
        /// Expected dimension.
        expected: usize,
        /// Offending dimension.
        got: usize,
    },

    /// An integrator configuration is unusable (non-positive or non-finite
    /// step, or a step no smaller than the final time).
    #[error("invalid integrator configuration: {0}")]
    InvalidConfig(String),

    /// A degenerate right-hand side was requested but the corresponding
    /// action of the structure is not the zero map.
    #[error(
        "requested {which} dynamics but the corresponding action is not trivial \
         (residual {residual:.3e} exceeds 1e-14)"
    )]
    TrivialActionViolated {
        /// Which degenerate form was requested.
        which: &'static str,
        /// Largest absolute value of the action on basis pairs.
        residual: f64,
    },

    /// The integration produced a non-finite component and was aborted.
    #[error("integration aborted: non-finite state after step {step} (t = {t})")]
    NonFinite {
        /// Index of the step that produced the non-finite value (1-based:
        /// the step from sample `step - 1` to sample `step`).
        step: usize,
        /// Time at which the failure was detected.
        t: f64,
    },

    /// A group-term provider failed to evaluate.
    #[error("group-term provider failed: {0}")]
    Provider(#[source] Box<dyn std::error::Error + Send + Sync>),

    /// Error propagated from the algebra layer.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
