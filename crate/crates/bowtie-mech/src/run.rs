//! The `run` subcommand: integrate one configured system and write the
//! trajectory CSV plus a metadata JSON next to it.
//!
//! Artifacts are written only after the integration has finished, so a
//! rejected config or a numerical abort leaves no partial files behind.

use std::path::{Path, PathBuf};
use std::time::Instant;

use bowtie_dynamics::{
    integrate, integrate_el, IntegratorConfig, PotentialEval, QuadraticLagrangian, ReducedState,
    RhsKind, Scheme, Trajectory, TrivialAction,
};
use bowtie_sl2c::{KPoint, Sl2cGroupTerms, Su2};
use nalgebra::DVector;
use serde::Serialize;

use crate::config::{RunConfig, SchemeKind, SystemKind};
use crate::error::{MechError, Result};
use crate::systems::{structure_digest, structure_for};

/// Where the artifacts went and what the run looked like numerically.
#[derive(Debug, Serialize)]
pub struct RunSummary {
    /// Trajectory CSV path.
    pub csv: PathBuf,
    /// Metadata JSON path.
    pub meta: PathBuf,
    /// Number of CSV data rows (samples), `floor(t_end/step) + 1`.
    pub rows: usize,
    /// Energy at the initial sample.
    pub initial_energy: f64,
    /// Largest `|E(t) − E(0)|` along the run.
    pub max_energy_drift: f64,
}

/// Everything recorded next to the trajectory.
#[derive(Serialize)]
struct RunMetadata<'a> {
    /// The parsed config, echoed back.
    config: &'a RunConfig,
    /// SHA-256 of the structure document the run used.
    structure_sha256: String,
    /// Sample count.
    rows: usize,
    /// Energy summary of the recorded column.
    energy: EnergySummary,
    /// Wall-clock integration time in seconds (excluded from the
    /// determinism contract, which covers the CSV bytes only).
    wall_time_s: f64,
}

#[derive(Serialize)]
struct EnergySummary {
    initial: f64,
    #[serde(rename = "final")]
    final_value: f64,
    max_drift: f64,
}

/// Loads a config file and runs it.
pub fn run_from_path(config_path: &Path) -> Result<RunSummary> {
    let config = RunConfig::load(config_path)?;
    run(&config)
}

/// Integrates the configured system and writes `<output>.csv` and
/// `<output>.meta.json`.
pub fn run(config: &RunConfig) -> Result<RunSummary> {
    let structure = structure_for(config.system, config.structure_path.as_ref().map(Path::new))?;
    let (i1, i2) = config.inertia_matrices(structure.dim_g(), structure.dim_h())?;
    let lagrangian = QuadraticLagrangian::new(i1, i2).map_err(MechError::from_dynamics)?;
    let (xi, eta) = config.initial_velocities(structure.dim_g(), structure.dim_h())?;
    let initial = ReducedState::new(xi, eta);
    let scheme = match config.integrator.scheme {
        SchemeKind::Rk4 => Scheme::Rk4,
        SchemeKind::Euler => Scheme::Euler,
    };
    let int_config = IntegratorConfig::new(config.integrator.step, config.integrator.t_end, scheme)
        .map_err(MechError::from_dynamics)?;

    // The unitary-factor point is config surface only: validate it so a
    // bad file fails loudly, even though no reduced flow consumes it.
    if let Some(m) = config.group_a_matrix() {
        Su2::from_matrix(m)
            .map_err(|e| MechError::Config(format!("initial.group_a: {e}")))?;
    }

    let digest = structure_digest(&structure)?;
    let started = Instant::now();
    let trajectory = match config.system {
        SystemKind::Sl2cEp | SystemKind::CustomStructure => {
            integrate(&structure, &lagrangian, &initial, &int_config, RhsKind::Full)
                .map_err(MechError::from_dynamics)?
        }
        SystemKind::SemidirectLeftTrivial => integrate(
            &structure,
            &lagrangian,
            &initial,
            &int_config,
            RhsKind::Semidirect(TrivialAction::LeftTrivial),
        )
        .map_err(MechError::from_dynamics)?,
        SystemKind::SemidirectRightTrivial => integrate(
            &structure,
            &lagrangian,
            &initial,
            &int_config,
            RhsKind::Semidirect(TrivialAction::RightTrivial),
        )
        .map_err(MechError::from_dynamics)?,
        SystemKind::Sl2cElOnH => run_el_on_h(config, &structure, &lagrangian, &initial, &int_config)?,
    };
    let wall_time_s = started.elapsed().as_secs_f64();

    write_artifacts(config, &trajectory, digest, wall_time_s)
}

/// The partially reduced flow: group point from the config (identity when
/// omitted), linear potential from the config (zero when omitted).
fn run_el_on_h(
    config: &RunConfig,
    structure: &bowtie_algebra::MatchedPairStructure,
    lagrangian: &QuadraticLagrangian,
    initial: &ReducedState,
    int_config: &IntegratorConfig,
) -> Result<Trajectory> {
    let b0 = match config.initial.group_b {
        Some([a, b, c]) => KPoint::new(a, b, c)
            .map_err(|e| MechError::Config(format!("initial.group_b: {e}")))?,
        None => KPoint::identity(),
    };
    let chi = match &config.potential {
        Some(p) => {
            if p.chi.len() != 3 {
                return Err(MechError::Config(format!(
                    "potential.chi has length {}, the group chart has dimension 3",
                    p.chi.len()
                )));
            }
            DVector::from_column_slice(&p.chi)
        }
        None => DVector::zeros(3),
    };
    let potential = move |h: &DVector<f64>| PotentialEval {
        value: chi.dot(h),
        gradient: chi.clone(),
    };
    let h0 = DVector::from_column_slice(b0.triple().as_slice());
    let out = integrate_el(
        structure,
        lagrangian,
        initial,
        &h0,
        &Sl2cGroupTerms,
        &potential,
        int_config,
    )
    .map_err(MechError::from_dynamics)?;
    Ok(out.trajectory)
}

/// Writes both artifacts; called only with a finished trajectory.
fn write_artifacts(
    config: &RunConfig,
    trajectory: &Trajectory,
    structure_sha256: String,
    wall_time_s: f64,
) -> Result<RunSummary> {
    let csv_path = PathBuf::from(format!("{}.csv", config.output));
    let meta_path = PathBuf::from(format!("{}.meta.json", config.output));

    let initial_energy = trajectory.samples.first().map_or(0.0, |s| s.energy);
    let final_energy = trajectory.samples.last().map_or(0.0, |s| s.energy);
    let max_drift = trajectory.max_energy_drift();

    let meta = RunMetadata {
        config,
        structure_sha256,
        rows: trajectory.len(),
        energy: EnergySummary {
            initial: initial_energy,
            final_value: final_energy,
            max_drift,
        },
        wall_time_s,
    };
    let mut meta_json = serde_json::to_string_pretty(&meta)
        .map_err(|e| MechError::Config(format!("cannot serialize metadata: {e}")))?;
    meta_json.push('\n');

    std::fs::write(&csv_path, trajectory.to_csv_string()).map_err(|e| MechError::Io {
        path: csv_path.clone(),
        source: e,
    })?;
    std::fs::write(&meta_path, meta_json).map_err(|e| MechError::Io {
        path: meta_path.clone(),
        source: e,
    })?;

    Ok(RunSummary {
        csv: csv_path,
        meta: meta_path,
        rows: trajectory.len(),
        initial_energy,
        max_energy_drift: max_drift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn benchmark_config(output: &str) -> RunConfig {
        serde_json::from_value(serde_json::json!({
            "system": "sl2c_ep",
            "inertia_1": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            "inertia_2": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            "initial": { "xi": [1.0, 0.0, 0.0], "eta": [0.0, 0.0, 1.0] },
            "integrator": { "step": 1e-3, "t_end": 0.5 },
            "output": output
        }))
        .unwrap()
    }

    #[test]
    fn run_writes_both_artifacts_with_the_promised_row_count() {
        let dir = tempfile::tempdir().unwrap();
        let prefix = dir.path().join("bench");
        let config = benchmark_config(prefix.to_str().unwrap());
        let summary = run(&config).unwrap();
        assert_eq!(summary.rows, 501);
        assert_eq!(summary.initial_energy, 2.0);
        assert!(summary.max_energy_drift < 1e-8);
        let csv = std::fs::read_to_string(&summary.csv).unwrap();
        assert_eq!(csv.lines().count(), 502, "header plus one line per sample");
        let meta: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&summary.meta).unwrap()).unwrap();
        assert_eq!(meta["rows"], 501);
        assert_eq!(meta["config"]["system"], "sl2c_ep");
        assert_eq!(meta["structure_sha256"].as_str().unwrap().len(), 64);
    }

    #[test]
    fn failed_runs_leave_no_artifacts() {
        let dir = tempfile::tempdir().unwrap();
        let prefix = dir.path().join("reject");
        let mut config = benchmark_config(prefix.to_str().unwrap());
        config.inertia_1[0][0] = -1.0; // not positive definite
        let err = run(&config).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(!prefix.with_extension("csv").exists());
        assert!(!prefix.with_extension("meta.json").exists());
    }

    #[test]
    fn group_a_must_be_special_unitary_when_given() {
        let dir = tempfile::tempdir().unwrap();
        let prefix = dir.path().join("a");
        let mut config = benchmark_config(prefix.to_str().unwrap());
        config.initial.group_a = Some([[2.0, 0.0], [0.0, 0.0], [0.0, 0.0], [2.0, 0.0]]);
        let err = run(&config).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        // The identity matrix passes.
        config.initial.group_a = Some([[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]);
        run(&config).unwrap();
    }
}
