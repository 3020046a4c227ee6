//! Central-difference differentiation with a Richardson self-diagnosis.
//!
//! Used to check that every closed-form infinitesimal quantity in the
//! workspace really is the derivative it claims to be. The estimate
//! carries its own quality report: two Richardson extrapolants from three
//! nested steps, whose disagreement flags a step small enough that
//! roundoff, not truncation, dominates.

use nalgebra::DVector;

use crate::{OracleError, Result};

/// Relative disagreement of the two Richardson extrapolants above which an
/// estimate is flagged as roundoff-dominated.
pub const ROUNDOFF_FLAG_TOL: f64 = 1e-8;

/// A derivative estimate with its self-diagnosis.
#[derive(Debug, Clone)]
pub struct DerivativeEstimate {
    /// Central difference at the requested step.
    pub value: DVector<f64>,
    /// Richardson extrapolation from the steps `h` and `h/2` (fourth-order
    /// accurate when truncation dominates).
    pub refined: DVector<f64>,
    /// Max-abs disagreement of the two Richardson extrapolants, relative
    /// to the estimate's scale.
    pub richardson_gap: f64,
    /// True when the gap exceeds [`ROUNDOFF_FLAG_TOL`]: the step is too
    /// small for the function's noise floor and the estimate should not be
    /// trusted to truncation-order accuracy.
    pub roundoff_dominated: bool,
}

/// Differentiates a one-parameter curve at 0 by central differences at
/// steps `h`, `h/2` and `h/4`.
///
/// The curve is whatever the caller composes: for a vector chart,
/// `t ↦ map(point + t·direction)`; for a group chart, `t ↦ map(point ⊕
/// exp(t·direction))` with the group's exponential. The chart choice thus
/// lives at the call site, where the types are known.
pub fn central_difference(
    curve: &dyn Fn(f64) -> DVector<f64>,
    h: f64,
) -> Result<DerivativeEstimate> {
    if !h.is_finite() || h <= 0.0 {
        return Err(OracleError::InvalidStep { h });
    }
    let stencil = |s: f64| (curve(s) - curve(-s)) / (2.0 * s);
    let d1 = stencil(h);
    let d2 = stencil(h / 2.0);
    let d4 = stencil(h / 4.0);

    // Richardson: with err(h) = c·h² + O(h⁴), (4·d(h/2) − d(h))/3 cancels
    // the quadratic term. Two independent extrapolants from the nested
    // pairs must agree unless roundoff has taken over.
    let r1 = (&d2 * 4.0 - &d1) / 3.0;
    let r2 = (&d4 * 4.0 - &d2) / 3.0;
    let scale = r2.amax().max(1.0);
    let richardson_gap = (&r1 - &r2).amax() / scale;

    Ok(DerivativeEstimate {
        value: d1,
        refined: r2,
        richardson_gap,
        roundoff_dominated: richardson_gap > ROUNDOFF_FLAG_TOL,
    })
}

/// Directional derivative of a map between vector charts:
/// `d/dt map(point + t·direction)` at `t = 0`.
pub fn finite_difference(
    map: &dyn Fn(&DVector<f64>) -> DVector<f64>,
    point: &DVector<f64>,
    direction: &DVector<f64>,
    h: f64,
) -> Result<DerivativeEstimate> {
    central_difference(&|t| map(&(point + direction * t)), h)
}
