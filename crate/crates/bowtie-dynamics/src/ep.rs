//! Euler–Poincaré right-hand sides: full matched-pair form and the
//! semidirect-product degenerations obtained when one action is trivial.

use bowtie_algebra::{
    matched_coadjoint, transpose_map, MatchedMomentum, MatchedPairStructure,
};
use nalgebra::DVector;

use crate::{DynamicsError, QuadraticLagrangian, ReducedState, Result};

/// Largest action value (over basis pairs) still accepted as "the zero map"
/// when a semidirect degeneration is requested.
const TRIVIALITY_TOL: f64 = 1e-14;

/// Which action of the matched pair is required to vanish for a
/// semidirect-product right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialAction {
    /// The left action `▷ : 𝔥 × 𝔤 → 𝔤` is the zero map; `𝔥` acts on `𝔤`
    /// only through `◁`, giving the semidirect pair `𝔤 ⋉ 𝔥`.
    LeftTrivial,
    /// The right action `◁ : 𝔥 × 𝔤 → 𝔥` is the zero map, giving `𝔤 ⋊ 𝔥`.
    RightTrivial,
}

/// Right-hand-side selector for [`crate::integrate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhsKind {
    /// Full matched-pair Euler–Poincaré flow.
    Full,
    /// Term-deleted semidirect form (validates the triviality precondition
    /// on every evaluation).
    Semidirect(TrivialAction),
}

/// Full Euler–Poincaré right-hand side `(μ̇, ν̇) = −ad*_{(ξ,η)}(μ, ν)`.
///
/// The momenta are obtained from `state` by the Legendre transform of
/// `lagrangian`; the coadjoint action is the one and only implementation in
/// [`bowtie_algebra::matched_coadjoint`], negated slot-wise, so this routine
/// cannot drift out of sync with the algebra layer.
pub fn ep_rhs(
    structure: &MatchedPairStructure,
    lagrangian: &QuadraticLagrangian,
    state: &ReducedState,
) -> Result<MatchedMomentum> {
    check_compatible(structure, lagrangian)?;
    let m = lagrangian.momenta(state)?;
    let coad = matched_coadjoint(structure, &state.element(), &m)?;
    Ok(MatchedMomentum::new(-coad.mu, -coad.nu))
}

/// Semidirect-product right-hand side with the vanished action's terms
/// deleted from the sum rather than evaluated.
///
/// With `▷ ≡ 0` the equations reduce to `μ̇ = −ad*_ξ μ + 𝔞*_η ν`,
/// `ν̇ = −ad*_η ν − ξ▷*ν`; with `◁ ≡ 0` they reduce to
/// `μ̇ = −ad*_ξ μ + μ◁*η`, `ν̇ = −ad*_η ν − 𝔟*_ξ μ`. The surviving terms are
/// assembled by the same transpose routine on the same operands as the full
/// form, and the deleted terms are exactly zero there, so the two routes
/// agree to the last bit (`f64 ==`) — an equality the integration tests
/// assert rather than assume.
///
/// The triviality precondition is validated on every call by evaluating the
/// action on all basis pairs; a residual above `1e-14` is an error, because
/// silently deleting non-zero terms would integrate the wrong equations.
pub fn semidirect_ep_rhs(
    structure: &MatchedPairStructure,
    lagrangian: &QuadraticLagrangian,
    state: &ReducedState,
    which: TrivialAction,
) -> Result<MatchedMomentum> {
    check_compatible(structure, lagrangian)?;
    validate_trivial(structure, which)?;

    let m = lagrangian.momenta(state)?;
    let xi = &state.xi;
    let eta = &state.eta;
    let dg = structure.dim_g();
    let dh = structure.dim_h();

    let t_ad_g = transpose_map(|w| structure.bracket_g(xi, w), dg, dg, &m.mu)?;
    let t_ad_h = transpose_map(|w| structure.bracket_h(eta, w), dh, dh, &m.nu)?;

    let (slot_g, slot_h) = match which {
        TrivialAction::LeftTrivial => {
            // Surviving coupling terms: 𝔞*_η ν in the first slot, ξ▷*ν in
            // the second.
            let t_a = transpose_map(|x| structure.act_right(eta, x), dg, dh, &m.nu)?;
            let t_dact = transpose_map(|y| structure.act_right(y, xi), dh, dh, &m.nu)?;
            (-t_ad_g - t_a, -t_ad_h + t_dact)
        }
        TrivialAction::RightTrivial => {
            // Surviving coupling terms: μ◁*η in the first slot, 𝔟*_ξ μ in
            // the second.
            let t_lact = transpose_map(|x| structure.act_left(eta, x), dg, dg, &m.mu)?;
            let t_b = transpose_map(|y| structure.act_left(y, xi), dh, dg, &m.mu)?;
            (-t_ad_g - t_lact, -t_ad_h + t_b)
        }
    };
    Ok(MatchedMomentum::new(-slot_g, -slot_h))
}

/// Evaluates a right-hand side according to `kind`.
pub(crate) fn eval_rhs(
    structure: &MatchedPairStructure,
    lagrangian: &QuadraticLagrangian,
    state: &ReducedState,
    kind: RhsKind,
) -> Result<MatchedMomentum> {
    match kind {
        RhsKind::Full => ep_rhs(structure, lagrangian, state),
        RhsKind::Semidirect(which) => semidirect_ep_rhs(structure, lagrangian, state, which),
    }
}

fn check_compatible(
    structure: &MatchedPairStructure,
    lagrangian: &QuadraticLagrangian,
) -> Result<()> {
    if structure.dim_g() != lagrangian.dim_g() {
        return Err(DynamicsError::DimensionMismatch {
            context: "structure vs Lagrangian, first factor",
            expected: structure.dim_g(),
            got: lagrangian.dim_g(),
        });
    }
    if structure.dim_h() != lagrangian.dim_h() {
        return Err(DynamicsError::DimensionMismatch {
            context: "structure vs Lagrangian, second factor",
            expected: structure.dim_h(),
            got: lagrangian.dim_h(),
        });
    }
    Ok(())
}

fn validate_trivial(structure: &MatchedPairStructure, which: TrivialAction) -> Result<()> {
    let dg = structure.dim_g();
    let dh = structure.dim_h();
    let mut residual: f64 = 0.0;
    for i in 0..dh {
        let f_i = DVector::from_fn(dh, |r, _| if r == i { 1.0 } else { 0.0 });
        for j in 0..dg {
            let e_j = DVector::from_fn(dg, |r, _| if r == j { 1.0 } else { 0.0 });
            let image = match which {
                TrivialAction::LeftTrivial => structure.act_left(&f_i, &e_j),
                TrivialAction::RightTrivial => structure.act_right(&f_i, &e_j),
            };
            residual = residual.max(image.amax());
        }
    }
    if residual < TRIVIALITY_TOL {
        Ok(())
    } else {
        Err(DynamicsError::TrivialActionViolated {
            which: match which {
                TrivialAction::LeftTrivial => "left-trivial (▷ ≡ 0)",
                TrivialAction::RightTrivial => "right-trivial (◁ ≡ 0)",
            },
            residual,
        })
    }
}
