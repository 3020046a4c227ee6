//! Group-level structure: the mutual actions between K and SU(2), the
//! bowtie product group they generate, and the embedding of everything
//! into SL(2,ℂ).
//!
//! The two actions are the unique pair solving the factorization problem
//!
//! ```text
//! B·A = (B▷A)·(B◁A),      B▷A ∈ SU(2),  B◁A ∈ K,
//! ```
//!
//! i.e. they read off the Iwasawa-style factors of the SL(2,ℂ) product
//! B·A. Both are evaluated in closed form here (no orthogonalization), and
//! every call certifies its own output: a result that leaves the codomain
//! group signals that the formula was applied outside its validity, which
//! is a [`Sl2cError::ClosureFailure`] rather than a silently wrong value.

use nalgebra::{Complex, Matrix2};

use crate::kgroup::{mat_k, KPoint};
use crate::su2::{mat_su, Su2};
use crate::{Result, Sl2cError, Vec3};

/// Tolerance for the codomain-membership certificates of the two group
/// actions (and for the traceless check of [`split_algebra`]).
pub const ACTION_CLOSURE_TOL: f64 = 1e-10;

/// Left action `B▷A` of K on SU(2): the unitary factor of `B·A`.
///
/// Writing `M = B·A` (in the 2×2 representation) and `n = ‖M e₂‖`, the
/// factor is assembled column by column: its second column is `M e₂ / n`
/// and its first column is `(B⁻¹)†A e₁ / n`. Unitarity of the result is
/// certified on every call.
// Negated comparison so a NaN residual takes the error branch.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn group_act_left(b: &KPoint, a: &Su2) -> Result<Su2> {
    let m = b.rep_2x2() * a.matrix();
    let n = m.column(1).norm();
    let w = b.inverse().rep_2x2().adjoint() * a.matrix();
    let out = Matrix2::from_columns(&[w.column(0).unscale(n), m.column(1).unscale(n)]);

    let candidate = Su2::from_matrix_unchecked(out);
    let residual = candidate.unitarity_residual().max(candidate.det_residual());
    if !(residual < ACTION_CLOSURE_TOL) {
        return Err(Sl2cError::ClosureFailure {
            operation: "left action (unitary factor of B·A)",
            residual,
        });
    }
    Ok(candidate)
}

/// Right action `B◁A` of SU(2) on K: the triangular factor of `B·A`.
///
/// With `M = B·A` and columns `m₁ = M e₁`, `m₂ = M e₂`:
///
/// ```text
/// 1 + c′ = 1/‖m₂‖²,    a′ + ib′ = ⟨m₂, m₁⟩ / ‖m₂‖²
/// ```
///
/// (⟨·,·⟩ conjugate-linear in the first slot). The complementary factor
/// `M·(B◁A)⁻¹` must be unitary; that certificate is checked on every call.
// Negated comparison so a NaN residual takes the error branch.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn group_act_right(b: &KPoint, a: &Su2) -> Result<KPoint> {
    let m = b.rep_2x2() * a.matrix();
    let n2 = m.column(1).norm_squared();
    let ab = m.column(1).dotc(&m.column(0)) / Complex::new(n2, 0.0);
    let out = KPoint::new(ab.re, ab.im, 1.0 / n2 - 1.0)?;

    let complement = m * out.inverse().rep_2x2();
    let residual = (complement.adjoint() * complement - Matrix2::<Complex<f64>>::identity())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    if !(residual < ACTION_CLOSURE_TOL) {
        return Err(Sl2cError::ClosureFailure {
            operation: "right action (triangular factor of B·A)",
            residual,
        });
    }
    Ok(out)
}

/// An element `(A, B)` of the bowtie product SU(2) ⋈ K.
///
/// The pair multiplies through the mutual actions,
/// `(A₁,B₁)(A₂,B₂) = (A₁(B₁▷A₂), (B₁◁A₂)B₂)`, which makes
/// [`embed`](Self::embed) `(A,B) ↦ A·B` a group isomorphism onto SL(2,ℂ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchedGroupElement {
    a: Su2,
    b: KPoint,
}

impl MatchedGroupElement {
    /// Pairs two factor elements.
    pub fn new(a: Su2, b: KPoint) -> Self {
        Self { a, b }
    }

    /// The identity `(e, e)`.
    pub fn identity() -> Self {
        Self { a: Su2::identity(), b: KPoint::identity() }
    }

    /// The SU(2) factor.
    pub fn su2_factor(&self) -> &Su2 {
        &self.a
    }

    /// The K factor.
    pub fn k_factor(&self) -> &KPoint {
        &self.b
    }

    /// Group product `(A₁(B₁▷A₂), (B₁◁A₂)B₂)`. Fails only if an action
    /// fails its closure certificate.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Ok(Self {
            a: self.a * group_act_left(&self.b, &rhs.a)?,
            b: group_act_right(&self.b, &rhs.a)? * rhs.b,
        })
    }

    /// Group inverse `(B⁻¹▷A⁻¹, B⁻¹◁A⁻¹)`.
    pub fn inverse(&self) -> Result<Self> {
        let binv = self.b.inverse();
        let ainv = self.a.inverse();
        Ok(Self { a: group_act_left(&binv, &ainv)?, b: group_act_right(&binv, &ainv)? })
    }

    /// The SL(2,ℂ) matrix `A·B`.
    pub fn embed(&self) -> Matrix2<Complex<f64>> {
        self.a.matrix() * self.b.rep_2x2()
    }
}

/// Embeds an algebra pair `(X, Y) ∈ ℝ³ ⊕ ℝ³ ≅ 𝔰𝔲(2) ⊕ 𝔎` as the traceless
/// matrix `mat_su(X) + mat_k(Y) ∈ 𝔰𝔩(2,ℂ)`.
pub fn embed_algebra(x: &Vec3, y: &Vec3) -> Matrix2<Complex<f64>> {
    mat_su(x) + mat_k(y)
}

/// Splits a traceless matrix `[[α, β], [γ, −α]]` into its 𝔰𝔲(2) and 𝔎
/// components (inverse of [`embed_algebra`]):
///
/// ```text
/// X = (−2 Im β, −2 Re β, −2 Im α),    Y = (Re w, Im w, 2 Re α),  w = γ + β̄.
/// ```
///
/// The split only reads the first row and `γ`, so the traceless constraint
/// (which ties `m₂₂` to `α`) is validated rather than assumed.
pub fn split_algebra(m: &Matrix2<Complex<f64>>) -> Result<(Vec3, Vec3)> {
    let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let trace = (m[(0, 0)] + m[(1, 1)]).norm();
    if trace > ACTION_CLOSURE_TOL * scale {
        return Err(Sl2cError::NotTraceless { residual: trace });
    }
    let alpha = m[(0, 0)];
    let beta = m[(0, 1)];
    let w = m[(1, 0)] + beta.conj();
    let x = Vec3::new(-2.0 * beta.im, -2.0 * beta.re, -2.0 * alpha.im);
    let y = Vec3::new(w.re, w.im, 2.0 * alpha.re);
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2::su2_exp;
    use approx::assert_abs_diff_eq;

    fn max_cdiff(a: &Matrix2<Complex<f64>>, b: &Matrix2<Complex<f64>>) -> f64 {
        (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn sample_a() -> Su2 {
        su2_exp(&Vec3::new(0.4, -1.1, 0.7))
    }

    fn sample_b() -> KPoint {
        KPoint::new(0.8, -0.3, 1.4).unwrap()
    }

    #[test]
    fn actions_at_the_identities() {
        let a = sample_a();
        let b = sample_b();
        // e▷A = A and e◁… : B◁e = B.
        let lhs = group_act_left(&KPoint::identity(), &a).unwrap();
        assert!(max_cdiff(lhs.matrix(), a.matrix()) < 1e-14);
        let rhs = group_act_right(&b, &Su2::identity()).unwrap();
        assert_abs_diff_eq!(rhs.triple(), b.triple(), epsilon = 1e-14);
        // B▷e = e and e◁A = e.
        let lhs = group_act_left(&b, &Su2::identity()).unwrap();
        assert!(max_cdiff(lhs.matrix(), Su2::identity().matrix()) < 1e-14);
        let rhs = group_act_right(&KPoint::identity(), &a).unwrap();
        assert_abs_diff_eq!(rhs.triple(), Vec3::zeros(), epsilon = 1e-14);
    }

    #[test]
    fn actions_factor_the_product() {
        let a = sample_a();
        let b = sample_b();
        let left = group_act_left(&b, &a).unwrap();
        let right = group_act_right(&b, &a).unwrap();
        let product = b.rep_2x2() * a.matrix();
        let refactored = left.matrix() * right.rep_2x2();
        assert!(max_cdiff(&product, &refactored) < 1e-13);
    }

    #[test]
    fn mixed_pair_product_is_the_action_pair() {
        let a = sample_a();
        let b = sample_b();
        let p = MatchedGroupElement::new(Su2::identity(), b)
            .mul(&MatchedGroupElement::new(a, KPoint::identity()))
            .unwrap();
        let left = group_act_left(&b, &a).unwrap();
        let right = group_act_right(&b, &a).unwrap();
        assert!(max_cdiff(p.su2_factor().matrix(), left.matrix()) < 1e-15);
        assert_abs_diff_eq!(p.k_factor().triple(), right.triple(), epsilon = 1e-15);
    }

    #[test]
    fn su2_subgroup_multiplies_componentwise() {
        let a1 = sample_a();
        let a2 = su2_exp(&Vec3::new(-0.2, 0.9, 0.1));
        let p = MatchedGroupElement::new(a1, KPoint::identity())
            .mul(&MatchedGroupElement::new(a2, KPoint::identity()))
            .unwrap();
        assert!(max_cdiff(p.su2_factor().matrix(), (a1 * a2).matrix()) < 1e-14);
        assert_abs_diff_eq!(p.k_factor().triple(), Vec3::zeros(), epsilon = 1e-14);
    }

    #[test]
    fn inverse_inverts_the_product() {
        let p = MatchedGroupElement::new(sample_a(), sample_b());
        let q = p.mul(&p.inverse().unwrap()).unwrap();
        assert!(max_cdiff(&q.embed(), &Matrix2::identity()) < 1e-12);
        let q = p.inverse().unwrap().mul(&p).unwrap();
        assert!(max_cdiff(&q.embed(), &Matrix2::identity()) < 1e-12);
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let p1 = MatchedGroupElement::new(sample_a(), sample_b());
        let p2 = MatchedGroupElement::new(
            su2_exp(&Vec3::new(1.2, 0.3, -0.5)),
            KPoint::new(-0.4, 0.9, -0.6).unwrap(),
        );
        let lhs = p1.mul(&p2).unwrap().embed();
        let rhs = p1.embed() * p2.embed();
        assert!(max_cdiff(&lhs, &rhs) < 1e-13);
    }

    #[test]
    fn split_inverts_embed() {
        let x = Vec3::new(0.3, -1.7, 2.2);
        let y = Vec3::new(-0.9, 0.5, 1.3);
        let (xs, ys) = split_algebra(&embed_algebra(&x, &y)).unwrap();
        // The 𝔰𝔲(2) entries halve and double exactly; the 𝔎 part cancels
        // `±x/2` terms through one rounding each.
        assert_eq!(xs, x);
        assert_abs_diff_eq!(ys, y, epsilon = 1e-15);
    }

    #[test]
    fn split_rejects_traceful_matrices() {
        let m = Matrix2::new(
            Complex::new(1.0, 0.0),
            Complex::ZERO,
            Complex::ZERO,
            Complex::new(1.0, 0.0),
        );
        assert!(matches!(split_algebra(&m), Err(Sl2cError::NotTraceless { .. })));
    }
}
