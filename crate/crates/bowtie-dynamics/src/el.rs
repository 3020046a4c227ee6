//! Partially reduced Euler–Lagrange equations that keep the second group
//! factor as a configuration variable.
//!
//! When the Lagrangian depends on a point `h` of the second factor (through
//! a potential, say), only the first factor's symmetry is quotiented out
//! and the reduced equations pick up two cotangent corrections sourced by
//! `δ𝔏/δh`:
//!
//! ```text
//! μ̇ = (full EP term) + T*σ_h(δ𝔏/δh)
//! ν̇ = (full EP term) + T*L_h(δ𝔏/δh)
//! ḣ = (chart velocity of h under the body velocity (ξ, η))
//! ```
//!
//! The two pulled-back cotangent maps and the chart velocity depend on the
//! concrete group and its parametrization, which this crate does not know;
//! they are supplied through [`GroupTermProvider`]. With `δ𝔏/δh = 0` the
//! corrections vanish and the flow is exactly the fully reduced one.

use bowtie_algebra::MatchedPairStructure;
use nalgebra::DVector;

use crate::{
    ep_rhs, DynamicsError, IntegratorConfig, QuadraticLagrangian, ReducedState, Result, Scheme,
    Trajectory, TrajectorySample,
};

/// Provider failure type: anything the caller's group code can produce.
pub type ProviderError = Box<dyn std::error::Error + Send + Sync>;

/// Group-dependent ingredients of the partially reduced equations.
///
/// `h` is a point of the second factor in some chart, passed as a plain
/// coordinate vector; the provider owns the interpretation.
pub trait GroupTermProvider {
    /// Dimension of the chart in which `h` is represented.
    fn chart_dim(&self) -> usize;

    /// The two cotangent corrections `(T*σ_h(δ𝔏/δh), T*L_h(δ𝔏/δh))`
    /// landing in `𝔤*` and `𝔥*` respectively.
    fn cotangent_terms(
        &self,
        h: &DVector<f64>,
        dl_dh: &DVector<f64>,
    ) -> std::result::Result<(DVector<f64>, DVector<f64>), ProviderError>;

    /// Chart velocity `ḣ` of the configuration point under body velocity
    /// `(ξ, η)`.
    fn group_velocity(
        &self,
        h: &DVector<f64>,
        xi: &DVector<f64>,
        eta: &DVector<f64>,
    ) -> std::result::Result<DVector<f64>, ProviderError>;
}

/// Potential evaluation: value and chart gradient at a group point.
#[derive(Debug, Clone)]
pub struct PotentialEval {
    /// `V(h)`.
    pub value: f64,
    /// `∇_h V` in the same chart as `h`.
    pub gradient: DVector<f64>,
}

/// Right-hand side of the partially reduced equations at one point.
#[derive(Debug, Clone)]
pub struct ElRhs {
    /// `μ̇ ∈ 𝔤*`.
    pub mu_dot: DVector<f64>,
    /// `ν̇ ∈ 𝔥*`.
    pub nu_dot: DVector<f64>,
    /// Chart velocity `ḣ`.
    pub h_dot: DVector<f64>,
}

/// Assembles the partially reduced right-hand side: the full
/// Euler–Poincaré term plus the provider's cotangent corrections for the
/// given `δ𝔏/δh`.
#[allow(non_snake_case)]
pub fn el_rhs_on_H(
    structure: &MatchedPairStructure,
    lagrangian: &QuadraticLagrangian,
    state: &ReducedState,
    h: &DVector<f64>,
    dl_dh: &DVector<f64>,
    provider: &dyn GroupTermProvider,
) -> Result<ElRhs> {
    let base = ep_rhs(structure, lagrangian, state)?;
    let (term_g, term_h) =
        provider.cotangent_terms(h, dl_dh).map_err(DynamicsError::Provider)?;
    if term_g.len() != lagrangian.dim_g() {
        return Err(DynamicsError::DimensionMismatch {
            context: "cotangent correction, first factor",
            expected: lagrangian.dim_g(),
            got: term_g.len(),
        });
    }
    if term_h.len() != lagrangian.dim_h() {
        return Err(DynamicsError::DimensionMismatch {
            context: "cotangent correction, second factor",
            expected: lagrangian.dim_h(),
            got: term_h.len(),
        });
    }
    let h_dot = provider
        .group_velocity(h, &state.xi, &state.eta)
        .map_err(DynamicsError::Provider)?;
    Ok(ElRhs { mu_dot: base.mu + term_g, nu_dot: base.nu + term_h, h_dot })
}

/// A trajectory of the partially reduced system: the reduced samples plus
/// the configuration point of the second factor at each sample.
#[derive(Debug, Clone)]
pub struct ElTrajectory {
    /// Reduced samples (`energy` includes the potential).
    pub trajectory: Trajectory,
    /// Group configuration at each sample, in the provider's chart.
    pub group_points: Vec<DVector<f64>>,
}

/// Integrates the partially reduced equations with a configuration-dependent
/// potential, `𝔏(ξ, η, h) = ⟨I₁ξ, ξ⟩ + ⟨I₂η, η⟩ − V(h)`.
///
/// The extended ODE variable is `(μ, ν, h)`; `δ𝔏/δh = −∇V` feeds the
/// cotangent corrections. The recorded energy is
/// `⟨μ,ξ⟩ + ⟨ν,η⟩ − 𝔏 = kinetic + V`, conserved by the exact flow.
pub fn integrate_el(
    structure: &MatchedPairStructure,
    lagrangian: &QuadraticLagrangian,
    initial: &ReducedState,
    h0: &DVector<f64>,
    provider: &dyn GroupTermProvider,
    potential: &dyn Fn(&DVector<f64>) -> PotentialEval,
    config: &IntegratorConfig,
) -> Result<ElTrajectory> {
    IntegratorConfig::new(config.step, config.t_end, config.scheme)?;
    let dg = lagrangian.dim_g();
    let dh = lagrangian.dim_h();
    let dp = provider.chart_dim();
    if h0.len() != dp {
        return Err(DynamicsError::DimensionMismatch {
            context: "initial group point vs provider chart",
            expected: dp,
            got: h0.len(),
        });
    }
    structure.check_element(&initial.element())?;

    let m0 = lagrangian.momenta(initial)?;
    let mut y = DVector::zeros(dg + dh + dp);
    y.rows_mut(0, dg).copy_from(&m0.mu);
    y.rows_mut(dg, dh).copy_from(&m0.nu);
    y.rows_mut(dg + dh, dp).copy_from(h0);

    let n_steps = config.n_steps();
    let mut trajectory = Trajectory::with_capacity(dg, dh, n_steps + 1);
    let mut group_points = Vec::with_capacity(n_steps + 1);

    let rhs = |y: &DVector<f64>, t: f64| -> Result<DVector<f64>> {
        let (state, h) = split_state(y, dg, dh, dp, lagrangian, t)?;
        let dl_dh = -potential(&h).gradient;
        let d = el_rhs_on_H(structure, lagrangian, &state, &h, &dl_dh, provider)?;
        let mut out = DVector::zeros(dg + dh + dp);
        out.rows_mut(0, dg).copy_from(&d.mu_dot);
        out.rows_mut(dg, dh).copy_from(&d.nu_dot);
        out.rows_mut(dg + dh, dp).copy_from(&d.h_dot);
        Ok(out)
    };

    let record = |trajectory: &mut Trajectory,
                      group_points: &mut Vec<DVector<f64>>,
                      t: f64,
                      y: &DVector<f64>|
     -> Result<()> {
        let (state, h) = split_state(y, dg, dh, dp, lagrangian, t)?;
        let m = lagrangian.momenta(&state)?;
        let kinetic_pairing = m.mu.dot(&state.xi) + m.nu.dot(&state.eta);
        let lag_value = lagrangian.value(&state.xi, &state.eta)? - potential(&h).value;
        trajectory.samples.push(TrajectorySample {
            t,
            xi: state.xi,
            eta: state.eta,
            mu: y.rows(0, dg).into_owned(),
            nu: y.rows(dg, dh).into_owned(),
            energy: kinetic_pairing - lag_value,
        });
        group_points.push(h);
        Ok(())
    };

    record(&mut trajectory, &mut group_points, initial.t, &y)?;
    let h_step = config.step;
    for k in 0..n_steps {
        let t = initial.t + k as f64 * h_step;
        y = match config.scheme {
            Scheme::Euler => {
                let k1 = rhs(&y, t)?;
                y + h_step * k1
            }
            Scheme::Rk4 => {
                let k1 = rhs(&y, t)?;
                let k2 = rhs(&(&y + (h_step / 2.0) * &k1), t + h_step / 2.0)?;
                let k3 = rhs(&(&y + (h_step / 2.0) * &k2), t + h_step / 2.0)?;
                let k4 = rhs(&(&y + h_step * &k3), t + h_step)?;
                y + (h_step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            }
        };
        let t_next = initial.t + (k + 1) as f64 * h_step;
        if y.iter().any(|x| !x.is_finite()) {
            return Err(DynamicsError::NonFinite { step: k + 1, t: t_next });
        }
        record(&mut trajectory, &mut group_points, t_next, &y)?;
    }
    Ok(ElTrajectory { trajectory, group_points })
}

fn split_state(
    y: &DVector<f64>,
    dg: usize,
    dh: usize,
    dp: usize,
    lagrangian: &QuadraticLagrangian,
    t: f64,
) -> Result<(ReducedState, DVector<f64>)> {
    let m = bowtie_algebra::MatchedMomentum::new(
        y.rows(0, dg).into_owned(),
        y.rows(dg, dh).into_owned(),
    );
    let (xi, eta) = lagrangian.legendre_inverse(&m)?;
    Ok((ReducedState { xi, eta, t }, y.rows(dg + dh, dp).into_owned()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use bowtie_algebra::BilinearMap;
    use nalgebra::{dvector, Vector3};

    fn cross(a: &DVector<f64>, b: &DVector<f64>) -> DVector<f64> {
        let a = Vector3::new(a[0], a[1], a[2]);
        let b = Vector3::new(b[0], b[1], b[2]);
        DVector::from_column_slice(a.cross(&b).as_slice())
    }

    fn zero_map() -> BilinearMap {
        Box::new(|_: &DVector<f64>, b: &DVector<f64>| DVector::zeros(b.len()))
    }

    /// so(3) × (abelian ℝ³): the second factor is a vector group, so the
    /// chart is global, `L_h` is the identity, and `σ_h ≡ 0`.
    fn structure() -> MatchedPairStructure {
        MatchedPairStructure::new(
            3,
            3,
            Box::new(|a: &DVector<f64>, b: &DVector<f64>| cross(a, b)),
            zero_map(),
            zero_map(),
            zero_map(),
        )
        .unwrap()
    }

    struct VectorGroup;

    impl GroupTermProvider for VectorGroup {
        fn chart_dim(&self) -> usize {
            3
        }

        fn cotangent_terms(
            &self,
            _h: &DVector<f64>,
            dl_dh: &DVector<f64>,
        ) -> std::result::Result<(DVector<f64>, DVector<f64>), ProviderError> {
            Ok((DVector::zeros(3), dl_dh.clone()))
        }

        fn group_velocity(
            &self,
            _h: &DVector<f64>,
            _xi: &DVector<f64>,
            eta: &DVector<f64>,
        ) -> std::result::Result<DVector<f64>, ProviderError> {
            Ok(eta.clone())
        }
    }

    #[test]
    fn zero_group_gradient_reduces_to_ep_rhs() {
        let s = structure();
        let lag = QuadraticLagrangian::identity(3, 3);
        let state = ReducedState::new(dvector![0.4, -0.2, 0.9], dvector![0.1, 0.1, -0.5]);
        let h = dvector![1.0, 2.0, 3.0];
        let rhs =
            el_rhs_on_H(&s, &lag, &state, &h, &DVector::zeros(3), &VectorGroup).unwrap();
        let base = ep_rhs(&s, &lag, &state).unwrap();
        assert_eq!(rhs.mu_dot, base.mu);
        assert_eq!(rhs.nu_dot, base.nu);
        assert_eq!(rhs.h_dot, state.eta);
    }

    #[test]
    fn harmonic_potential_on_vector_group_conserves_energy() {
        // With I₂ = identity and V = ½k|h|², the (h, ν) block is a harmonic
        // oscillator; energy = kinetic + V must be conserved.
        let s = structure();
        let lag = QuadraticLagrangian::identity(3, 3);
        let initial = ReducedState::new(dvector![0.3, -0.6, 0.2], dvector![0.5, 0.0, -0.25]);
        let h0 = dvector![1.0, -1.0, 0.5];
        let spring = 4.0;
        let potential = move |h: &DVector<f64>| PotentialEval {
            value: 0.5 * spring * h.dot(h),
            gradient: spring * h,
        };
        let cfg = IntegratorConfig::new(1e-3, 4.0, Scheme::Rk4).unwrap();
        let out =
            integrate_el(&s, &lag, &initial, &h0, &VectorGroup, &potential, &cfg).unwrap();
        assert_eq!(out.trajectory.len(), out.group_points.len());
        let drift = out.trajectory.max_energy_drift();
        assert!(drift < 1e-9, "energy drift {drift}");

        // The oscillator block has the closed-form solution
        // h(t) = h₀ cos(ωt) + (η₀/ω) sin(ωt) with ω² = k/2 (since ν = 2η
        // and ν̇ = −k h ⇒ ḧ = −(k/2) h).
        let omega = (spring / 2.0_f64).sqrt();
        let last = out.trajectory.samples.last().unwrap();
        let t = last.t;
        let expected =
            &h0 * (omega * t).cos() + &initial.eta * ((omega * t).sin() / omega);
        assert_abs_diff_eq!(out.group_points.last().unwrap(), &expected, epsilon = 1e-7);
    }

    #[test]
    fn provider_errors_are_propagated() {
        struct Failing;
        impl GroupTermProvider for Failing {
            fn chart_dim(&self) -> usize {
                3
            }
            fn cotangent_terms(
                &self,
                _h: &DVector<f64>,
                _dl_dh: &DVector<f64>,
            ) -> std::result::Result<(DVector<f64>, DVector<f64>), ProviderError> {
                Err("chart left its validity domain".into())
            }
            fn group_velocity(
                &self,
                _h: &DVector<f64>,
                _xi: &DVector<f64>,
                _eta: &DVector<f64>,
            ) -> std::result::Result<DVector<f64>, ProviderError> {
                Ok(DVector::zeros(3))
            }
        }
        let s = structure();
        let lag = QuadraticLagrangian::identity(3, 3);
        let state = ReducedState::new(dvector![1.0, 0.0, 0.0], dvector![0.0, 1.0, 0.0]);
        let err = el_rhs_on_H(
            &s,
            &lag,
            &state,
            &dvector![0.0, 0.0, 0.0],
            &dvector![1.0, 1.0, 1.0],
            &Failing,
        )
        .unwrap_err();
        assert!(matches!(err, DynamicsError::Provider(_)));
    }
}
