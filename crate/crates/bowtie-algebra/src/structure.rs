//! The structure container and the coupled bracket.

use nalgebra::DVector;

use crate::error::AlgebraError;
use crate::Result;

/// A bilinear map supplied as a callable. The two arguments may live in
/// different spaces (e.g. the actions map `𝔥 × 𝔤` into `𝔤` or `𝔥`).
pub type BilinearMap = Box<dyn Fn(&DVector<f64>, &DVector<f64>) -> DVector<f64> + Send + Sync>;

/// A matched pair of Lie algebras `𝔤 ⋈ 𝔥`.
///
/// Holds the two brackets and the two mutual actions as callables. The
/// constructor only checks dimensions; the algebraic laws (antisymmetry,
/// Jacobi, module axioms, compatibility) are *testable* properties, verified
/// to tolerance by [`crate::check_axioms`].
pub struct MatchedPairStructure {
    dim_g: usize,
    dim_h: usize,
    bracket_g: BilinearMap,
    bracket_h: BilinearMap,
    act_left: BilinearMap,
    act_right: BilinearMap,
}

impl MatchedPairStructure {
    /// Builds a structure from its four primitive maps.
    ///
    /// * `bracket_g`: `𝔤 × 𝔤 → 𝔤`
    /// * `bracket_h`: `𝔥 × 𝔥 → 𝔥`
    /// * `act_left`: `(η, ξ) ↦ η ▷ ξ ∈ 𝔤`
    /// * `act_right`: `(η, ξ) ↦ η ◁ ξ ∈ 𝔥`
    ///
    /// Zero-dimensional algebras are rejected: every downstream consumer
    /// (transposes, axiom sampling, dynamics) assumes at least one basis
    /// vector per factor.
    pub fn new(
        dim_g: usize,
        dim_h: usize,
        bracket_g: BilinearMap,
        bracket_h: BilinearMap,
        act_left: BilinearMap,
        act_right: BilinearMap,
    ) -> Result<Self> {
        if dim_g == 0 || dim_h == 0 {
            return Err(AlgebraError::InvalidDimension { dim_g, dim_h });
        }
        Ok(Self {
            dim_g,
            dim_h,
            bracket_g,
            bracket_h,
            act_left,
            act_right,
        })
    }

    /// Dimension of the first factor `𝔤`.
    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    /// Dimension of the second factor `𝔥`.
    pub fn dim_h(&self) -> usize {
        self.dim_h
    }

    /// Evaluates `[x₁, x₂]` in `𝔤`.
    pub fn bracket_g(&self, x1: &DVector<f64>, x2: &DVector<f64>) -> DVector<f64> {
        (self.bracket_g)(x1, x2)
    }

    /// Evaluates `[y₁, y₂]` in `𝔥`.
    pub fn bracket_h(&self, y1: &DVector<f64>, y2: &DVector<f64>) -> DVector<f64> {
        (self.bracket_h)(y1, y2)
    }

    /// Evaluates the left action `η ▷ ξ ∈ 𝔤`.
    pub fn act_left(&self, eta: &DVector<f64>, xi: &DVector<f64>) -> DVector<f64> {
        (self.act_left)(eta, xi)
    }

    /// Evaluates the right action `η ◁ ξ ∈ 𝔥`.
    pub fn act_right(&self, eta: &DVector<f64>, xi: &DVector<f64>) -> DVector<f64> {
        (self.act_right)(eta, xi)
    }

    /// Checks that an element has the dimensions this structure expects.
    pub fn check_element(&self, z: &MatchedElement) -> Result<()> {
        check_dim("matched element, 𝔤 component", self.dim_g, z.xi.len())?;
        check_dim("matched element, 𝔥 component", self.dim_h, z.eta.len())
    }

    /// Checks that a momentum has the dimensions this structure expects.
    pub fn check_momentum(&self, m: &MatchedMomentum) -> Result<()> {
        check_dim("matched momentum, 𝔤* component", self.dim_g, m.mu.len())?;
        check_dim("matched momentum, 𝔥* component", self.dim_h, m.nu.len())
    }
}

pub(crate) fn check_dim(context: &'static str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch {
            context,
            expected,
            got,
        })
    }
}

/// An element `(ξ, η)` of the direct-sum algebra `𝔤 ⋈ 𝔥`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchedElement {
    /// Component in `𝔤`.
    pub xi: DVector<f64>,
    /// Component in `𝔥`.
    pub eta: DVector<f64>,
}

impl MatchedElement {
    /// Builds an element from its two components.
    pub fn new(xi: DVector<f64>, eta: DVector<f64>) -> Self {
        Self { xi, eta }
    }

    /// The zero element of given dimensions.
    pub fn zeros(dim_g: usize, dim_h: usize) -> Self {
        Self {
            xi: DVector::zeros(dim_g),
            eta: DVector::zeros(dim_h),
        }
    }

    /// Max-norm over both components.
    pub fn norm_inf(&self) -> f64 {
        self.xi.amax().max(self.eta.amax())
    }
}

/// A momentum `(μ, ν) ∈ 𝔤* × 𝔥*`, paired with elements by the dot product.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchedMomentum {
    /// Component in `𝔤*`.
    pub mu: DVector<f64>,
    /// Component in `𝔥*`.
    pub nu: DVector<f64>,
}

impl MatchedMomentum {
    /// Builds a momentum from its two components.
    pub fn new(mu: DVector<f64>, nu: DVector<f64>) -> Self {
        Self { mu, nu }
    }

    /// The canonical pairing `⟨(μ,ν), (ξ,η)⟩ = μ·ξ + ν·η`.
    pub fn pair(&self, z: &MatchedElement) -> f64 {
        self.mu.dot(&z.xi) + self.nu.dot(&z.eta)
    }
}

/// The coupled bracket of the matched pair:
///
/// ```text
/// [(ξ₁,η₁), (ξ₂,η₂)] = ( [ξ₁,ξ₂] + η₁▷ξ₂ − η₂▷ξ₁ ,
///                        [η₁,η₂] + η₁◁ξ₂ − η₂◁ξ₁ )
/// ```
///
/// Restricting to pure-`𝔤` (or pure-`𝔥`) inputs recovers the factor bracket,
/// so both factors embed as subalgebras.
pub fn matched_bracket(
    s: &MatchedPairStructure,
    a: &MatchedElement,
    b: &MatchedElement,
) -> Result<MatchedElement> {
    s.check_element(a)?;
    s.check_element(b)?;
    let xi = s.bracket_g(&a.xi, &b.xi) + s.act_left(&a.eta, &b.xi) - s.act_left(&b.eta, &a.xi);
    let eta = s.bracket_h(&a.eta, &b.eta) + s.act_right(&a.eta, &b.xi) - s.act_right(&b.eta, &a.xi);
    Ok(MatchedElement::new(xi, eta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nalgebra::dvector;

    /// so(3) bracket as cross product, in dynamic vectors.
    fn cross(a: &DVector<f64>, b: &DVector<f64>) -> DVector<f64> {
        dvector![
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]
        ]
    }

    /// Direct sum so(3) ⊕ so(3) with trivial actions.
    fn direct_sum() -> MatchedPairStructure {
        MatchedPairStructure::new(
            3,
            3,
            Box::new(cross),
            Box::new(cross),
            Box::new(|_, xi| DVector::zeros(xi.len())),
            Box::new(|eta, _| DVector::zeros(eta.len())),
        )
        .unwrap()
    }

    #[test]
    fn bracket_of_element_with_itself_vanishes() {
        let s = direct_sum();
        let a = MatchedElement::new(dvector![1.0, -2.0, 0.5], dvector![0.3, 0.0, -1.0]);
        let out = matched_bracket(&s, &a, &a).unwrap();
        assert_eq!(out.norm_inf(), 0.0);
    }

    #[test]
    fn pure_g_inputs_reduce_to_the_factor_bracket() {
        let s = direct_sum();
        let a = MatchedElement::new(dvector![1.0, 0.0, 0.0], DVector::zeros(3));
        let b = MatchedElement::new(dvector![0.0, 1.0, 0.0], DVector::zeros(3));
        let out = matched_bracket(&s, &a, &b).unwrap();
        assert_abs_diff_eq!(out.xi, dvector![0.0, 0.0, 1.0], epsilon = 0.0);
        assert_eq!(out.eta.amax(), 0.0);
    }

    #[test]
    fn zero_dimensions_are_rejected() {
        let r = MatchedPairStructure::new(
            0,
            3,
            Box::new(|a, _| a.clone()),
            Box::new(|a, _| a.clone()),
            Box::new(|_, b| b.clone()),
            Box::new(|a, _| a.clone()),
        );
        assert!(matches!(r, Err(AlgebraError::InvalidDimension { .. })));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let s = direct_sum();
        let a = MatchedElement::new(dvector![1.0, 0.0], DVector::zeros(3));
        let b = MatchedElement::zeros(3, 3);
        assert!(matches!(
            matched_bracket(&s, &a, &b),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn pairing_is_the_dot_product() {
        let m = MatchedMomentum::new(dvector![1.0, 2.0, 3.0], dvector![-1.0, 0.0, 1.0]);
        let z = MatchedElement::new(dvector![1.0, 1.0, 1.0], dvector![2.0, 2.0, 2.0]);
        assert_eq!(m.pair(&z), 6.0 + 0.0);
    }
}
