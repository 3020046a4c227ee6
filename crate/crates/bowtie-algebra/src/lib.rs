//! Matched pairs of Lie algebras over ℝ.
//!
//! A *matched pair* `𝔤 ⋈ 𝔥` consists of two finite-dimensional real Lie
//! algebras together with a left action `▷ : 𝔥 × 𝔤 → 𝔤` and a right action
//! `◁ : 𝔥 × 𝔤 → 𝔥` satisfying two compatibility conditions, such that the
//! direct-sum vector space becomes a Lie algebra under the coupled bracket
//!
//! ```text
//! [(ξ₁,η₁), (ξ₂,η₂)] = ( [ξ₁,ξ₂] + η₁▷ξ₂ − η₂▷ξ₁ ,
//!                        [η₁,η₂] + η₁◁ξ₂ − η₂◁ξ₁ )
//! ```
//!
//! This crate provides the structure container ([`MatchedPairStructure`]),
//! the coupled bracket ([`matched_bracket`]), the coadjoint action on the
//! dual ([`matched_coadjoint`]), a randomized axiom checker
//! ([`check_axioms`]), and serialization of structures as dense
//! structure-constant documents ([`StructureDocument`]).
//!
//! # Conventions
//!
//! * Duals are identified with the underlying coordinate space through the
//!   Euclidean dot product; a "dual vector" is an ordinary coordinate vector
//!   paired by `⟨m, v⟩ = m · v`.
//! * Every starred (dual) map is assembled *numerically* by evaluating the
//!   primitive map on the standard basis and transposing the resulting
//!   matrix ([`transpose_map`]). Sign conventions therefore flow from a
//!   single place — the primitive brackets and actions — and cannot drift
//!   between hand-coded dual formulas. See `docs/conventions.md` in the
//!   repository root for why this discipline matters.
//! * The coadjoint convention is `⟨ad*_z m, w⟩ = −⟨m, [z, w]⟩`.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so structures and elements may be freely shared across
//! threads.

mod axioms;
mod coadjoint;
mod document;
mod error;
mod structure;
mod transpose;

pub use axioms::{check_axioms, AxiomReport};
pub use coadjoint::matched_coadjoint;
pub use document::StructureDocument;
pub use error::AlgebraError;
pub use structure::{
    matched_bracket, BilinearMap, MatchedElement, MatchedMomentum, MatchedPairStructure,
};
pub use transpose::{assemble_matrix, transpose_map};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, AlgebraError>;
