//! Reduced dynamics on 𝔰𝔲(2)* ⊕ 𝔎* in closed form, the structure object
//! that feeds the generic machinery the same system, and reconstruction of
//! group trajectories from body velocities.
//!
//! The closed-form right-hand side [`ep_rhs_sl2c`] is written term-for-term
//! against the transpose assembly in [`bowtie_algebra::matched_coadjoint`]:
//! each named intermediate equals (bit for bit) the corresponding
//! transposed term, and the final combination repeats the generic
//! expression shape, so the two routes agree under `f64` equality — an
//! equality asserted, not assumed, by this crate's integration tests.

use bowtie_algebra::MatchedPairStructure;
use bowtie_dynamics::{GroupTermProvider, ProviderError, QuadraticLagrangian, ReducedState};
use nalgebra::{Complex, DVector, Matrix2};

use crate::actions::{
    ad_star_k, b_act_x, dual_cross_act_g, dual_cross_act_h, dual_left_act, dual_right_act,
    mutual_inf_actions, x_act_b,
};
use crate::kgroup::{k_bracket, k_left_translation, KPoint};
use crate::su2::{mat_su, Su2};
use crate::{Result, Vec3};

fn to_vec3(v: &DVector<f64>) -> Vec3 {
    Vec3::new(v[0], v[1], v[2])
}

fn to_dvector(v: &Vec3) -> DVector<f64> {
    DVector::from_column_slice(v.as_slice())
}

/// The matched-pair structure of 𝔰𝔲(2) ⋈ 𝔎 as a [`MatchedPairStructure`],
/// for feeding this concrete system through the generic algebra and
/// dynamics layers:
///
/// * brackets: `[X₁,X₂] = X₁×X₂` and `[Y₁,Y₂] = 𝐤×(Y₁×Y₂)`,
/// * actions: [`mutual_inf_actions`].
pub fn matched_structure() -> MatchedPairStructure {
    MatchedPairStructure::new(
        3,
        3,
        Box::new(|x1, x2| to_dvector(&to_vec3(x1).cross(&to_vec3(x2)))),
        Box::new(|y1, y2| to_dvector(&k_bracket(&to_vec3(y1), &to_vec3(y2)))),
        Box::new(|eta, xi| to_dvector(&mutual_inf_actions(&to_vec3(eta), &to_vec3(xi)).0)),
        Box::new(|eta, xi| to_dvector(&mutual_inf_actions(&to_vec3(eta), &to_vec3(xi)).1)),
    )
    .expect("dimensions 3, 3 are valid")
}

/// Closed-form matched Euler–Poincaré right-hand side:
///
/// ```text
/// μ̇ = −ad*_ξ μ + μ◁*η + 𝔞*_η ν
/// ν̇ = −ad*_η ν − ξ▷*ν − 𝔟*_ξ μ
/// ```
///
/// with `μ = 2I₁ξ`, `ν = 2I₂η` taken from `lagrangian` through the same
/// Legendre code path as the generic route (so the momenta agree bitwise).
/// Each intermediate below mirrors one transpose-assembled term of
/// [`bowtie_algebra::matched_coadjoint`] exactly, including evaluation
/// order; the doc comment on each line names the matching term.
pub fn ep_rhs_sl2c(
    lagrangian: &QuadraticLagrangian,
    xi: &Vec3,
    eta: &Vec3,
) -> Result<(Vec3, Vec3)> {
    let state = ReducedState::new(to_dvector(xi), to_dvector(eta));
    let m = lagrangian.momenta(&state)?;
    let mu = to_vec3(&m.mu);
    let nu = to_vec3(&m.nu);

    let t_ad_g = mu.cross(xi); // (w ↦ [ξ,w])* μ  = −ad*_ξ μ
    let t_ad_h = -ad_star_k(eta, &nu); // (w ↦ [η,w])* ν  = −ad*_η ν
    let t_lact = dual_left_act(eta, &mu); // μ◁*η
    let t_a = dual_cross_act_g(eta, &nu); // 𝔞*_η ν
    let t_dact = dual_right_act(xi, &nu); // ξ▷*ν
    let t_b = dual_cross_act_h(xi, &mu); // 𝔟*_ξ μ

    let slot_g = -t_ad_g - t_lact - t_a;
    let slot_h = -t_ad_h + t_dact + t_b;
    Ok((-slot_g, -slot_h))
}

/// Cotangent lift `T*σ_B : T*_B K → 𝔰𝔲(2)*` of the right action curve
/// `σ_B : A ↦ B◁A`, realized as the basis-assembled transpose of the
/// infinitesimal action `X ↦ B◁X` ([`x_act_b`]) in the triple chart:
/// `⟨T*σ_B(Ψ), X⟩ = ⟨Ψ, B◁X⟩`.
pub fn cotangent_sigma(b: &KPoint, psi: &Vec3) -> Vec3 {
    let c0 = x_act_b(b, &Vec3::x());
    let c1 = x_act_b(b, &Vec3::y());
    let c2 = x_act_b(b, &Vec3::z());
    Vec3::new(c0.dot(psi), c1.dot(psi), c2.dot(psi))
}

/// The two cotangent corrections of the partially reduced equations when
/// the Lagrangian depends on the K point `B` through `δ𝔏/δB`:
///
/// * 𝔰𝔲(2)*-term: `T*σ_B(δ𝔏/δB)` ([`cotangent_sigma`]),
/// * 𝔎*-term: `T*_e L_B(δ𝔏/δB) = δ𝔏/δB + (𝐁·δ𝔏/δB)𝐤` (transpose of the
///   left-translation Jacobian `I + 𝐁𝐤ᵀ`).
pub fn el_group_terms(b: &KPoint, dl_db: &Vec3) -> (Vec3, Vec3) {
    let g_term = cotangent_sigma(b, dl_db);
    let h_term = dl_db + b.triple().dot(dl_db) * crate::kgroup::k_vector();
    (g_term, h_term)
}

/// Reconstruction right-hand side: the group trajectory underlying body
/// velocities `(X, Y)` evolves by
///
/// ```text
/// Ȧ = A · mat_su(B▷X)              (2×2 chart of SU(2)),
/// Ḃ = B◁X + T_e L_B(Y)             (triple chart of K).
/// ```
pub fn reconstruct(a: &Su2, b: &KPoint, xi: &Vec3, eta: &Vec3) -> (Matrix2<Complex<f64>>, Vec3) {
    let da = a.matrix() * mat_su(&b_act_x(b, xi));
    let db = x_act_b(b, xi) + k_left_translation(b, eta);
    (da, db)
}

/// [`GroupTermProvider`] for the partially reduced equations with K as the
/// retained configuration factor, in the triple chart.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sl2cGroupTerms;

fn chart_point(h: &DVector<f64>) -> std::result::Result<KPoint, ProviderError> {
    if h.len() != 3 {
        return Err(format!("K chart point must have length 3, got {}", h.len()).into());
    }
    KPoint::new(h[0], h[1], h[2]).map_err(|e| -> ProviderError { Box::new(e) })
}

fn chart_vec(v: &DVector<f64>, what: &str) -> std::result::Result<Vec3, ProviderError> {
    if v.len() != 3 {
        return Err(format!("{what} must have length 3, got {}", v.len()).into());
    }
    Ok(to_vec3(v))
}

impl GroupTermProvider for Sl2cGroupTerms {
    fn chart_dim(&self) -> usize {
        3
    }

    fn cotangent_terms(
        &self,
        h: &DVector<f64>,
        dl_dh: &DVector<f64>,
    ) -> std::result::Result<(DVector<f64>, DVector<f64>), ProviderError> {
        let b = chart_point(h)?;
        let dl = chart_vec(dl_dh, "δ𝔏/δB")?;
        let (g_term, h_term) = el_group_terms(&b, &dl);
        Ok((to_dvector(&g_term), to_dvector(&h_term)))
    }

    fn group_velocity(
        &self,
        h: &DVector<f64>,
        xi: &DVector<f64>,
        eta: &DVector<f64>,
    ) -> std::result::Result<DVector<f64>, ProviderError> {
        let b = chart_point(h)?;
        let x = chart_vec(xi, "body velocity ξ")?;
        let y = chart_vec(eta, "body velocity η")?;
        Ok(to_dvector(&(x_act_b(&b, &x) + k_left_translation(&b, &y))))
    }
}
