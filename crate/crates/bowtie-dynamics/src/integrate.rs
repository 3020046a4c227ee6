//! Deterministic fixed-step integration of the momentum equations.

use bowtie_algebra::{MatchedMomentum, MatchedPairStructure};
use nalgebra::DVector;

use crate::ep::eval_rhs;
use crate::{
    reduced_energy, DynamicsError, QuadraticLagrangian, ReducedState, Result, RhsKind, Trajectory,
    TrajectorySample,
};

/// Time-stepping scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Classical fourth-order Runge–Kutta.
    Rk4,
    /// Explicit Euler (first order; kept for convergence studies).
    Euler,
}

/// Fixed-step integration window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    /// Step size (positive, finite, smaller than `t_end`).
    pub step: f64,
    /// Final time (the last recorded sample is at `floor(t_end/step)`
    /// steps).
    pub t_end: f64,
    /// Scheme used for every step.
    pub scheme: Scheme,
}

impl IntegratorConfig {
    /// Validates and builds a configuration.
    pub fn new(step: f64, t_end: f64, scheme: Scheme) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 {
            return Err(DynamicsError::InvalidConfig(format!(
                "step must be positive and finite, got {step}"
            )));
        }
        if !t_end.is_finite() || t_end <= step {
            return Err(DynamicsError::InvalidConfig(format!(
                "t_end must be finite and larger than the step, got t_end = {t_end}, step = {step}"
            )));
        }
        Ok(Self { step, t_end, scheme })
    }

    /// Number of steps taken: `floor(t_end / step)` in exact arithmetic.
    /// The recorded trajectory has one more row than this (the initial
    /// sample).
    pub fn n_steps(&self) -> usize {
        // A quotient that is an integer in exact arithmetic can land a
        // few ulps below it in binary (2.0 / 1e-5 ≈ 199999.99999999997
        // because 1e-5 itself rounds up); nudging by a relative epsilon
        // restores the exact-arithmetic floor without ever lifting a
        // genuinely fractional quotient past the next integer.
        let quotient = self.t_end / self.step;
        (quotient * (1.0 + 4.0 * f64::EPSILON)).floor() as usize
    }
}

/// Integrates the momentum form of the reduced equations from
/// `initial` with the right-hand side selected by `kind`.
///
/// The ODE variable is the stacked momentum `(μ, ν)`; the velocity needed
/// by the right-hand side is recovered through the inverse Legendre
/// transform at every stage evaluation, so the recorded `ξ, η` columns are
/// always consistent with the momenta. Sample `k` sits at
/// `t = initial.t + k·step`, computed as a product rather than a running
/// sum so recorded times carry no accumulated roundoff.
///
/// If any state component turns non-finite the integration aborts with
/// [`DynamicsError::NonFinite`] identifying the offending step; nothing is
/// recorded past the last finite sample.
pub fn integrate(
    structure: &MatchedPairStructure,
    lagrangian: &QuadraticLagrangian,
    initial: &ReducedState,
    config: &IntegratorConfig,
    kind: RhsKind,
) -> Result<Trajectory> {
    IntegratorConfig::new(config.step, config.t_end, config.scheme)?;
    let dg = lagrangian.dim_g();
    let dh = lagrangian.dim_h();
    structure.check_element(&initial.element())?;

    let m0 = lagrangian.momenta(initial)?;
    let mut y = pack(&m0.mu, &m0.nu);

    let n_steps = config.n_steps();
    let mut trajectory = Trajectory::with_capacity(dg, dh, n_steps + 1);
    record(&mut trajectory, lagrangian, initial.t, &y, dg, dh)?;

    let h = config.step;
    let rhs = |y: &DVector<f64>, t: f64| -> Result<DVector<f64>> {
        let m = unpack(y, dg, dh);
        let (xi, eta) = lagrangian.legendre_inverse(&m)?;
        let state = ReducedState { xi, eta, t };
        let d = eval_rhs(structure, lagrangian, &state, kind)?;
        Ok(pack(&d.mu, &d.nu))
    };

    for k in 0..n_steps {
        let t = initial.t + k as f64 * h;
        y = match config.scheme {
            Scheme::Euler => {
                let k1 = rhs(&y, t)?;
                y + h * k1
            }
            Scheme::Rk4 => {
                let k1 = rhs(&y, t)?;
                let k2 = rhs(&(&y + (h / 2.0) * &k1), t + h / 2.0)?;
                let k3 = rhs(&(&y + (h / 2.0) * &k2), t + h / 2.0)?;
                let k4 = rhs(&(&y + h * &k3), t + h)?;
                y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            }
        };
        let t_next = initial.t + (k + 1) as f64 * h;
        if y.iter().any(|x| !x.is_finite()) {
            return Err(DynamicsError::NonFinite { step: k + 1, t: t_next });
        }
        record(&mut trajectory, lagrangian, t_next, &y, dg, dh)?;
    }
    Ok(trajectory)
}

fn pack(mu: &DVector<f64>, nu: &DVector<f64>) -> DVector<f64> {
    let mut y = DVector::zeros(mu.len() + nu.len());
    y.rows_mut(0, mu.len()).copy_from(mu);
    y.rows_mut(mu.len(), nu.len()).copy_from(nu);
    y
}

fn unpack(y: &DVector<f64>, dg: usize, dh: usize) -> MatchedMomentum {
    MatchedMomentum::new(y.rows(0, dg).into_owned(), y.rows(dg, dh).into_owned())
}

fn record(
    trajectory: &mut Trajectory,
    lagrangian: &QuadraticLagrangian,
    t: f64,
    y: &DVector<f64>,
    dg: usize,
    dh: usize,
) -> Result<()> {
    let m = unpack(y, dg, dh);
    let (xi, eta) = lagrangian.legendre_inverse(&m)?;
    let state = ReducedState { xi: xi.clone(), eta: eta.clone(), t };
    let energy = reduced_energy(lagrangian, &state)?;
    trajectory.samples.push(TrajectorySample { t, xi, eta, mu: m.mu, nu: m.nu, energy });
    Ok(())
}
