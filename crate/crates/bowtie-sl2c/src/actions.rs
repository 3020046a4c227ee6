//! Infinitesimal and dual actions in the ℝ³ ⊕ ℝ³ identification of
//! 𝔰𝔲(2) ⊕ 𝔎.
//!
//! Everything here is a closed form of a derivative of the group actions
//! in [`crate::group`], or a transpose of such a derivative under the dot
//! pairing. Two independent certificates pin the formulas down, and both
//! are asserted in this crate's integration tests:
//!
//! * the matrix commutator of embedded algebra elements must decompose as
//!   `[ (η,ξ)-part ] = (η▷ξ, η◁ξ)` (plus the factor brackets), and
//! * each infinitesimal action must match the central-difference
//!   derivative of its group action along one-parameter subgroups.
//!
//! Dual maps are defined by `⟨f*(w), v⟩ = ⟨w, f(v)⟩` for the frozen-argument
//! primitive map `f`; the closed forms below reproduce, bit for bit, what
//! [`bowtie_algebra::transpose_map`] assembles from the primitives.

use nalgebra::Complex;

use crate::group::split_algebra;
use crate::kgroup::{k_vector, mat_k, KPoint};
use crate::su2::Su2;
use crate::{Result, Vec3};

/// The two infinitesimal mutual actions `(Y▷X, Y◁X)` of the algebra pair:
///
/// ```text
/// Y▷X = Y × (X × 𝐤) ∈ 𝔰𝔲(2),      Y◁X = Y × X ∈ 𝔎.
/// ```
pub fn mutual_inf_actions(y: &Vec3, x: &Vec3) -> (Vec3, Vec3) {
    (y.cross(&x.cross(&k_vector())), y.cross(x))
}

/// Group-level left action of K on the algebra 𝔰𝔲(2): `B▷X` is the 3×3
/// representation of `B` applied to `X` (derivative of `A ↦ B▷A` at the
/// identity).
pub fn b_act_x(b: &KPoint, x: &Vec3) -> Vec3 {
    b.rep_3x3() * x
}

/// Group-level right action of the algebra 𝔰𝔲(2) on K: the tangent vector
/// `B◁X ∈ T_B K` in triple coordinates (derivative of `A ↦ B◁A` at the
/// identity, i.e. `(d/dt)|₀ B◁exp(tX)`).
///
/// Closed form: with `u = X₂ + iX₁`, `w = a + ib`, `s = 1 + c`,
///
/// ```text
/// W = ū(1 − s²) + u w² − 2iX₃ w,
/// B◁X = (Re W / 2, Im W / 2, s(aX₂ − bX₁)).
/// ```
///
/// This equals `T_e R_B` applied to the 𝔎-projection of `B X̂ B⁻¹` (2×2
/// representations); it is *not* the cross-product expression suggested by
/// the auxiliary vector [`KPoint::tilde`], which fails the
/// finite-difference certificate. See the conventions note in the repo
/// docs.
pub fn x_act_b(b: &KPoint, x: &Vec3) -> Vec3 {
    let u = Complex::new(x.y, x.x);
    let w = Complex::new(b.a(), b.b());
    let s = 1.0 + b.c();
    let big_w = u.conj() * (1.0 - s * s) + u * w * w - Complex::new(0.0, 2.0 * x.z) * w;
    Vec3::new(big_w.re / 2.0, big_w.im / 2.0, s * (b.a() * x.y - b.b() * x.x))
}

/// Group-level right action of SU(2) on the algebra 𝔎: the 𝔎-projection of
/// `A⁻¹·Ŷ·A` (derivative of `B ↦ B◁A` along the 𝔎 directions at the
/// identity). Fails only if the conjugation leaves 𝔰𝔩(2,ℂ), which finite
/// inputs cannot cause.
pub fn k_act_su2(y: &Vec3, a: &Su2) -> Result<Vec3> {
    let conj = a.inverse().matrix() * mat_k(y) * a.matrix();
    Ok(split_algebra(&conj)?.1)
}

/// Dual of the group-level left action: `Φ◁*B = (B▷·)*(Φ)`, the 3×3
/// representation transposed.
pub fn dual_group_act(b: &KPoint, phi: &Vec3) -> Vec3 {
    b.rep_3x3().transpose() * phi
}

/// Dual of the left infinitesimal action with frozen `Y`:
/// `⟨Φ◁*Y, X⟩ = ⟨Φ, Y▷X⟩`, closed form `Y₃Φ − Φ₃Y`.
pub fn dual_left_act(y: &Vec3, phi: &Vec3) -> Vec3 {
    y.z * phi - phi.z * y
}

/// Dual of the right infinitesimal action with frozen `X`:
/// `⟨X▷*Ψ, Y⟩ = ⟨Ψ, Y◁X⟩`, closed form `X × Ψ`.
pub fn dual_right_act(x: &Vec3, psi: &Vec3) -> Vec3 {
    x.cross(psi)
}

/// Cross dual landing in 𝔰𝔲(2)*: the transpose of `X ↦ Y◁X` with frozen
/// `Y`, i.e. `⟨𝔞*_Y(Ψ), X⟩ = ⟨Ψ, Y◁X⟩`, closed form `Ψ × Y`.
pub fn dual_cross_act_g(y: &Vec3, psi: &Vec3) -> Vec3 {
    psi.cross(y)
}

/// Cross dual landing in 𝔎*: the transpose of `Y ↦ Y▷X` with frozen `X`,
/// i.e. `⟨𝔟*_X(Φ), Y⟩ = ⟨Φ, Y▷X⟩`, closed form `(Φ·X)𝐤 − Φ₃X`, written out
/// componentwise to mirror the transpose assembly exactly.
pub fn dual_cross_act_h(x: &Vec3, phi: &Vec3) -> Vec3 {
    Vec3::new(-(phi.z * x.x), -(phi.z * x.y), phi.x * x.x + phi.y * x.y)
}

/// Coadjoint action of 𝔰𝔲(2) on its dual under
/// `⟨ad*_X Φ, W⟩ = −⟨Φ, [X,W]⟩`: closed form `X × Φ`.
pub fn ad_star_su2(x: &Vec3, phi: &Vec3) -> Vec3 {
    x.cross(phi)
}

/// Coadjoint action of 𝔎 on its dual under `⟨ad*_Y Ψ, W⟩ = −⟨Ψ, [Y,W]⟩`
/// with the bracket `[Y,W] = 𝐤×(Y×W)`: closed form `(𝐤·Y)Ψ − (Ψ·Y)𝐤`,
/// written out componentwise to mirror the transpose assembly exactly.
pub fn ad_star_k(y: &Vec3, psi: &Vec3) -> Vec3 {
    Vec3::new(y.z * psi.x, y.z * psi.y, -(psi.x * y.x + psi.y * y.y))
}
