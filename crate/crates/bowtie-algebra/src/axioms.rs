//! Randomized verification of the matched-pair axioms.

use nalgebra::DVector;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::structure::{matched_bracket, MatchedElement, MatchedPairStructure};
use crate::Result;

/// Maximum absolute residuals of every structural law, over random tuples.
///
/// All fields are ∞-norm residuals of an identity that must vanish; a valid
/// matched pair built from closed-form primitives keeps each below
/// `~1e−12` for unit-scale samples (cubic expressions in inputs of norm
/// ≤ √3 accumulate at most a few hundred ulps).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct AxiomReport {
    /// `[x₁,x₂] + [x₂,x₁]` in `𝔤`.
    pub antisymmetry_g: f64,
    /// `[y₁,y₂] + [y₂,y₁]` in `𝔥`.
    pub antisymmetry_h: f64,
    /// Jacobi identity in `𝔤`.
    pub jacobi_g: f64,
    /// Jacobi identity in `𝔥`.
    pub jacobi_h: f64,
    /// Left-module law `[η₁,η₂]▷ξ = η₁▷(η₂▷ξ) − η₂▷(η₁▷ξ)`.
    pub left_module: f64,
    /// Right-module law `η◁[ξ₁,ξ₂] = (η◁ξ₁)◁ξ₂ − (η◁ξ₂)◁ξ₁`.
    pub right_module: f64,
    /// First compatibility condition
    /// `η▷[ξ₁,ξ₂] = [η▷ξ₁,ξ₂] + [ξ₁,η▷ξ₂] + (η◁ξ₁)▷ξ₂ − (η◁ξ₂)▷ξ₁`.
    pub compatibility_left: f64,
    /// Second compatibility condition
    /// `[η₁,η₂]◁ξ = [η₁,η₂◁ξ] + [η₁◁ξ,η₂] + η₁◁(η₂▷ξ) − η₂◁(η₁▷ξ)`.
    pub compatibility_right: f64,
    /// Jacobi identity of the coupled bracket on `𝔤 ⋈ 𝔥`.
    pub matched_jacobi: f64,
}

impl AxiomReport {
    /// The largest residual across all laws.
    pub fn max_residual(&self) -> f64 {
        self.iter().map(|(_, v)| v).fold(0.0, f64::max)
    }

    /// Named residuals, in a fixed order (used for reporting).
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, f64)> {
        [
            ("antisymmetry_g", self.antisymmetry_g),
            ("antisymmetry_h", self.antisymmetry_h),
            ("jacobi_g", self.jacobi_g),
            ("jacobi_h", self.jacobi_h),
            ("left_module", self.left_module),
            ("right_module", self.right_module),
            ("compatibility_left", self.compatibility_left),
            ("compatibility_right", self.compatibility_right),
            ("matched_jacobi", self.matched_jacobi),
        ]
        .into_iter()
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (name, value) in self.iter() {
            writeln!(f, "{name:>20}: {value:.3e}")?;
        }
        Ok(())
    }
}

fn uniform_vec(rng: &mut ChaCha8Rng, dim: usize) -> DVector<f64> {
    DVector::from_fn(dim, |_, _| rng.random_range(-1.0..1.0))
}

/// Evaluates every structural law on `samples` seeded random tuples with
/// components uniform in `[−1, 1]`, and reports the worst residual per law.
///
/// This never fails on a well-formed structure — residual *magnitudes* are
/// the caller's acceptance concern — but surfaces dimension errors from the
/// callables.
pub fn check_axioms(s: &MatchedPairStructure, samples: usize, seed: u64) -> Result<AxiomReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport::default();
    let dg = s.dim_g();
    let dh = s.dim_h();

    for _ in 0..samples.max(1) {
        let x1 = uniform_vec(&mut rng, dg);
        let x2 = uniform_vec(&mut rng, dg);
        let x3 = uniform_vec(&mut rng, dg);
        let y1 = uniform_vec(&mut rng, dh);
        let y2 = uniform_vec(&mut rng, dh);
        let y3 = uniform_vec(&mut rng, dh);

        report.antisymmetry_g = report
            .antisymmetry_g
            .max((s.bracket_g(&x1, &x2) + s.bracket_g(&x2, &x1)).amax());
        report.antisymmetry_h = report
            .antisymmetry_h
            .max((s.bracket_h(&y1, &y2) + s.bracket_h(&y2, &y1)).amax());

        let jac_g = s.bracket_g(&x1, &s.bracket_g(&x2, &x3))
            + s.bracket_g(&x2, &s.bracket_g(&x3, &x1))
            + s.bracket_g(&x3, &s.bracket_g(&x1, &x2));
        report.jacobi_g = report.jacobi_g.max(jac_g.amax());
        let jac_h = s.bracket_h(&y1, &s.bracket_h(&y2, &y3))
            + s.bracket_h(&y2, &s.bracket_h(&y3, &y1))
            + s.bracket_h(&y3, &s.bracket_h(&y1, &y2));
        report.jacobi_h = report.jacobi_h.max(jac_h.amax());

        let left_mod = s.act_left(&s.bracket_h(&y1, &y2), &x1)
            - s.act_left(&y1, &s.act_left(&y2, &x1))
            + s.act_left(&y2, &s.act_left(&y1, &x1));
        report.left_module = report.left_module.max(left_mod.amax());

        let right_mod = s.act_right(&y1, &s.bracket_g(&x1, &x2))
            - s.act_right(&s.act_right(&y1, &x1), &x2)
            + s.act_right(&s.act_right(&y1, &x2), &x1);
        report.right_module = report.right_module.max(right_mod.amax());

        let compat_l = s.act_left(&y1, &s.bracket_g(&x1, &x2))
            - s.bracket_g(&s.act_left(&y1, &x1), &x2)
            - s.bracket_g(&x1, &s.act_left(&y1, &x2))
            - s.act_left(&s.act_right(&y1, &x1), &x2)
            + s.act_left(&s.act_right(&y1, &x2), &x1);
        report.compatibility_left = report.compatibility_left.max(compat_l.amax());

        let compat_r = s.act_right(&s.bracket_h(&y1, &y2), &x1)
            - s.bracket_h(&y1, &s.act_right(&y2, &x1))
            - s.bracket_h(&s.act_right(&y1, &x1), &y2)
            - s.act_right(&y1, &s.act_left(&y2, &x1))
            + s.act_right(&y2, &s.act_left(&y1, &x1));
        report.compatibility_right = report.compatibility_right.max(compat_r.amax());

        let z1 = MatchedElement::new(x1, y1);
        let z2 = MatchedElement::new(x2, y2);
        let z3 = MatchedElement::new(x3, y3);
        let mut jac = matched_bracket(s, &z1, &matched_bracket(s, &z2, &z3)?)?;
        let term2 = matched_bracket(s, &z2, &matched_bracket(s, &z3, &z1)?)?;
        let term3 = matched_bracket(s, &z3, &matched_bracket(s, &z1, &z2)?)?;
        jac.xi += term2.xi + term3.xi;
        jac.eta += term2.eta + term3.eta;
        report.matched_jacobi = report.matched_jacobi.max(jac.norm_inf());
    }
    Ok(report)
}
