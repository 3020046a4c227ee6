//! Reduced Lagrangian dynamics on matched pairs of Lie algebras.
//!
//! For a quadratic kinetic Lagrangian `𝔏(ξ,η) = ⟨I₁ξ, ξ⟩ + ⟨I₂η, η⟩` on
//! `𝔤 ⋈ 𝔥`, the reduced equations of motion are a coupled pair of
//! Euler–Poincaré equations in the momenta `μ = δ𝔏/δξ`, `ν = δ𝔏/δη`:
//!
//! ```text
//! μ̇ = −ad*_ξ μ + μ◁*η + 𝔞*_η ν
//! ν̇ = −ad*_η ν − ξ▷*ν − 𝔟*_ξ μ
//! ```
//!
//! equivalently `(μ̇, ν̇) = −ad*_{(ξ,η)}(μ,ν)` for the coupled coadjoint
//! action of [`bowtie_algebra::matched_coadjoint`]. The flow conserves the
//! reduced energy `E = ⟨μ,ξ⟩ + ⟨ν,η⟩ − 𝔏` (equal to `𝔏` itself in the
//! quadratic case); the pointwise identity `⟨μ̇,ξ⟩ + ⟨ν̇,η⟩ = 0` is the
//! assertable form of that conservation law and is exercised throughout the
//! test suite.
//!
//! The crate provides:
//!
//! * [`QuadraticLagrangian`] — inertia pair with Legendre transform both
//!   ways,
//! * [`ep_rhs`] / [`semidirect_ep_rhs`] — the full and degenerate
//!   right-hand sides (one action trivial recovers classical
//!   semidirect-product mechanics; both trivial decouples the factors),
//! * [`el_rhs_on_H`] — the partially reduced equations that keep the
//!   second group factor as a configuration variable, with the
//!   group-dependent cotangent terms supplied by a [`GroupTermProvider`],
//! * [`integrate`] / [`integrate_el`] — deterministic fixed-step RK4/Euler
//!   in the momenta, with state recovered by the inverse Legendre transform
//!   at every stage,
//! * [`Trajectory`] — recorded samples with a stable CSV export.
//!
//! Everything is a pure function over immutable inputs; independent
//! trajectories can be integrated concurrently without coordination.

mod el;
mod ep;
mod error;
mod integrate;
mod lagrangian;
mod trajectory;

pub use el::{
    el_rhs_on_H, integrate_el, ElRhs, ElTrajectory, GroupTermProvider, PotentialEval,
    ProviderError,
};
pub use ep::{ep_rhs, semidirect_ep_rhs, RhsKind, TrivialAction};
pub use error::DynamicsError;
pub use integrate::{integrate, IntegratorConfig, Scheme};
pub use lagrangian::{reduced_energy, QuadraticLagrangian, ReducedState};
pub use trajectory::{Trajectory, TrajectorySample};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, DynamicsError>;
