//! Reference momentum flow assembled purely from structure constants.
//!
//! The production flow goes through the coupled coadjoint machinery; this
//! one never mentions actions or coupling at all. It treats the whole
//! six-dimensional algebra as one Lie algebra with known constants and
//! integrates `⟨μ̇, w⟩ = −⟨μ, [z, w]⟩` directly. The two must produce the
//! same trajectory, which is the strongest end-to-end check in the
//! workspace: it exercises every structure map, every transpose, and the
//! integrator at once.

use bowtie_dynamics::{
    reduced_energy, IntegratorConfig, QuadraticLagrangian, ReducedState, Trajectory,
    TrajectorySample,
};
use nalgebra::DVector;

use crate::bracket::StructureConstants;
use crate::{OracleError, Result};

/// Integrates the structure-constant form of the momentum equations with
/// the classical fourth-order scheme (the `scheme` field of `config` is
/// ignored: this reference exists to pin down one specific curve).
///
/// State layout: stacked momentum `(μ | ν)` in the basis order of
/// [`StructureConstants`]. Velocities come from `lagrangian`'s inverse
/// Legendre transform so the reference and production flows share their
/// definition of inertia — the dynamics under test is everything else.
pub fn reference_ep(
    sc: &StructureConstants,
    lagrangian: &QuadraticLagrangian,
    initial: &ReducedState,
    config: &IntegratorConfig,
) -> Result<Trajectory> {
    if lagrangian.dim_g() != 3 || lagrangian.dim_h() != 3 {
        return Err(OracleError::Dynamics(bowtie_dynamics::DynamicsError::DimensionMismatch {
            context: "structure-constant reference flow",
            expected: 3,
            got: lagrangian.dim_g().max(lagrangian.dim_h()),
        }));
    }
    let m0 = lagrangian.momenta(initial)?;
    let mut y = DVector::zeros(6);
    y.rows_mut(0, 3).copy_from(&m0.mu);
    y.rows_mut(3, 3).copy_from(&m0.nu);

    let rhs = |y: &DVector<f64>| -> Result<DVector<f64>> {
        let (xi, eta) = velocities(lagrangian, y)?;
        let z = [xi[0], xi[1], xi[2], eta[0], eta[1], eta[2]];
        let mut out = DVector::zeros(6);
        // Left-invariant momentum equation: ⟨μ̇, bₐ⟩ = ⟨μ, [z, bₐ]⟩
        // = Σᵢ zᵢ Σₖ c[i][a][k] μₖ (the rigid-body `μ̇ = μ × ω` extended to
        // all six dimensions).
        for a in 0..6 {
            let mut acc = 0.0;
            for (i, zi) in z.iter().enumerate() {
                for k in 0..6 {
                    acc += zi * sc.get(i, a, k) * y[k];
                }
            }
            out[a] = acc;
        }
        Ok(out)
    };

    let n_steps = config.n_steps();
    let h = config.step;
    let mut trajectory = Trajectory::with_capacity(3, 3, n_steps + 1);
    record(&mut trajectory, lagrangian, initial.t, &y)?;
    for k in 0..n_steps {
        let k1 = rhs(&y)?;
        let k2 = rhs(&(&y + (h / 2.0) * &k1))?;
        let k3 = rhs(&(&y + (h / 2.0) * &k2))?;
        let k4 = rhs(&(&y + h * &k3))?;
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        let t = initial.t + (k + 1) as f64 * h;
        if y.iter().any(|v| !v.is_finite()) {
            return Err(OracleError::NonFinite { step: k + 1, t });
        }
        record(&mut trajectory, lagrangian, t, &y)?;
    }
    Ok(trajectory)
}

fn velocities(
    lagrangian: &QuadraticLagrangian,
    y: &DVector<f64>,
) -> Result<(DVector<f64>, DVector<f64>)> {
    let m = bowtie_algebra::MatchedMomentum::new(y.rows(0, 3).into_owned(), y.rows(3, 3).into_owned());
    Ok(lagrangian.legendre_inverse(&m)?)
}

fn record(
    trajectory: &mut Trajectory,
    lagrangian: &QuadraticLagrangian,
    t: f64,
    y: &DVector<f64>,
) -> Result<()> {
    let (xi, eta) = velocities(lagrangian, y)?;
    let state = ReducedState { xi: xi.clone(), eta: eta.clone(), t };
    let energy = reduced_energy(lagrangian, &state)?;
    trajectory.samples.push(TrajectorySample {
        t,
        xi,
        eta,
        mu: y.rows(0, 3).into_owned(),
        nu: y.rows(3, 3).into_owned(),
        energy,
    });
    Ok(())
}
