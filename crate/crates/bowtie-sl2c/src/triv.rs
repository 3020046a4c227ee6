//! Trivialization of the tangent pair and the adjoint action of the bowtie
//! group on its algebra.
//!
//! A tangent pair may carry its velocities either at the group points
//! ("attached" form, the natural output of differentiating curves) or
//! pulled back to the identity with the action corrections folded in
//! ("trivialized" form, the natural input of the reduced equations). The
//! two forms are exchanged by [`trivialize`]/[`untrivialize`], which are
//! exact mutual inverses up to rounding.

use crate::actions::{b_act_x, x_act_b};
use crate::group::{embed_algebra, split_algebra, MatchedGroupElement};
use crate::kgroup::{alg_k_3x3, k_left_translation, k_right_translation, KPoint};
use crate::{Result, Vec3};

/// Pulls an attached velocity pair `(ξ, η)` at the K point `B` into the
/// trivialized pair
///
/// ```text
/// ξ′ = B⁻¹▷ξ,      η′ = T_{B⁻¹}R_B(B⁻¹◁ξ) + η,
/// ```
///
/// where the right-translation differential is `(1+c)·I` in the triple
/// chart. The SU(2) point does not enter: its contribution to the
/// isomorphism is the identity.
pub fn trivialize(b: &KPoint, xi: &Vec3, eta: &Vec3) -> (Vec3, Vec3) {
    let binv = b.inverse();
    let xi_t = b_act_x(&binv, xi);
    let eta_t = k_right_translation(b, &x_act_b(&binv, xi)) + eta;
    (xi_t, eta_t)
}

/// Inverse of [`trivialize`]:
///
/// ```text
/// ξ = B▷ξ′,      η = η′ + T_B L_{B⁻¹}(B◁ξ′),
/// ```
///
/// with the left-translation differential `V ↦ V + B⁻¹(𝐤·V)` in the triple
/// chart.
pub fn untrivialize(b: &KPoint, xi_t: &Vec3, eta_t: &Vec3) -> (Vec3, Vec3) {
    let xi = b_act_x(b, xi_t);
    let v = x_act_b(b, xi_t);
    let eta = eta_t + k_left_translation(&b.inverse(), &v);
    (xi, eta)
}

/// Adjoint action of K on its own algebra by conjugation in the 3×3
/// representation: `Ad_B(W) = B·Ŵ·B⁻¹` read back as a triple.
pub fn ad_k(b: &KPoint, w: &Vec3) -> Vec3 {
    let m = b.rep_3x3() * alg_k_3x3(w) * b.inverse().rep_3x3();
    Vec3::new(-m[(2, 0)], -m[(2, 1)], m[(0, 0)])
}

/// Adjoint action `Ad_{(A,B)⁻¹}(ξ, η)` of the bowtie group on its algebra,
/// i.e. the derivative at the identity of `q ↦ p⁻¹qp`.
///
/// Assembled factor by factor: the SU(2) part conjugates the embedded
/// element (`Z = A⁻¹(ξ̂+η̂)A`, split back into components), then the K part
/// moves the 𝔰𝔲(2) component by `B⁻¹▷·` with the right-translation
/// correction landing in 𝔎, and the 𝔎 component by `Ad_{B⁻¹}`. Matches
/// conjugation by `embed(p)⁻¹` in SL(2,ℂ).
pub fn adjoint_matched(p: &MatchedGroupElement, xi: &Vec3, eta: &Vec3) -> Result<(Vec3, Vec3)> {
    let a = p.su2_factor();
    let b = p.k_factor();
    let z = a.inverse().matrix() * embed_algebra(xi, eta) * a.matrix();
    let (z_su, z_k) = split_algebra(&z)?;

    let binv = b.inverse();
    let xi_out = b_act_x(&binv, &z_su);
    let eta_out = k_right_translation(b, &x_act_b(&binv, &z_su)) + ad_k(&binv, &z_k);
    Ok((xi_out, eta_out))
}
