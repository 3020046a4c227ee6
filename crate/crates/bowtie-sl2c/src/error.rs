//! Error type for the SU(2) ⋈ K layer.

use bowtie_algebra::AlgebraError;

/// Errors raised by group-element validation and the matched-pair actions.
#[derive(Debug, thiserror::Error)]
pub enum Sl2cError {
    /// A matrix claimed to lie in SU(2) is not unitary.
    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary {
        /// `‖m†m − I‖` (max-abs over entries).
        residual: f64,
    },

    /// A matrix claimed to lie in SU(2) does not have unit determinant.
    #[error("matrix does not have determinant 1 (residual {residual:.3e})")]
    NotUnimodular {
        /// `|det − 1|`.
        residual: f64,
    },

    /// A triple `(a, b, c)` violates the chart constraint `c > −1` (or is
    /// not finite).
    #[error("invalid K parameter: c = {c} must be finite and > -1 (a, b finite)")]
    InvalidKParameter {
        /// Offending scale parameter.
        c: f64,
    },

    /// A matrix is not in the lower-triangular positive-diagonal shape of
    /// the K representations.
    #[error("matrix is not K-shaped: {reason}")]
    NotKShaped {
        /// Which shape constraint failed.
        reason: String,
    },

    /// A matrix expected in 𝔰𝔩(2,ℂ) has a non-negligible trace.
    #[error("matrix is not traceless (residual {residual:.3e})")]
    NotTraceless {
        /// `|tr|` relative to the matrix scale.
        residual: f64,
    },

    /// A closed-form group action produced a result outside its codomain
    /// group — the formula was applied outside its validity or is
    /// mis-transcribed.
    #[error("{operation} left the codomain group (residual {residual:.3e})")]
    ClosureFailure {
        /// Which action failed.
        operation: &'static str,
        /// Invariant violation of the result.
        residual: f64,
    },

    /// Error propagated from the abstract algebra layer.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    /// Error propagated from the reduced-dynamics layer (e.g. a Lagrangian
    /// whose inertia blocks are not 3×3).
    #[error(transparent)]
    Dynamics(#[from] bowtie_dynamics::DynamicsError),
}
