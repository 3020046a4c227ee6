//! Independent reference implementations ("oracles") for the matched-pair
//! workspace.
//!
//! Everything here recomputes, by deliberately pedestrian means, a quantity
//! that some other crate computes by a closed-form or structure-aware
//! route:
//!
//! * [`iwasawa_factor`] — factors an arbitrary determinant-1 matrix into
//!   unitary × triangular by Gram–Schmidt, checking the closed-form group
//!   actions;
//! * [`decompose_algebra`] — splits a traceless matrix over the stacked
//!   basis by a 6×6 linear solve, checking the entry-reading split;
//! * [`commutator_bracket`] / [`StructureConstants`] — the coupled bracket
//!   via raw matrix commutators, checking the action-assembled bracket;
//! * [`reference_ep`] — the momentum flow assembled from structure
//!   constants alone, checking the coadjoint-transpose flow;
//! * [`central_difference`] / [`finite_difference`] — derivative estimates
//!   with Richardson self-diagnosis, checking every tangent-lift formula.
//!
//! The value of this crate is *disagreement*: none of these routines share
//! code with the implementations they certify beyond the basis embedding
//! itself, so a transcription slip in either route surfaces as a test
//! failure instead of a consistent pair of wrong answers.

mod bracket;
mod decompose;
mod error;
mod factor;
mod fd;
mod flow;
mod matrix;

pub use bracket::{commutator_bracket, StructureConstants, STRUCTURE_TOL};
pub use decompose::{decompose_algebra, DECOMPOSE_TOL};
pub use error::OracleError;
pub use factor::{iwasawa_factor, FACTOR_TOL};
pub use fd::{central_difference, finite_difference, DerivativeEstimate, ROUNDOFF_FLAG_TOL};
pub use flow::reference_ep;
pub use matrix::{Sl2cMatrix, MATRIX_TOL};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, OracleError>;
