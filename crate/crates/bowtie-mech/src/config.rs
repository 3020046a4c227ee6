//! JSON run-configuration schema: which system to integrate, with what
//! inertia, from what initial state, and where to put the artifacts.

use std::path::Path;

use nalgebra::{Complex, DMatrix, DVector, Matrix2};
use serde::{Deserialize, Serialize};

use crate::error::{MechError, Result};

/// The named systems the front-end can integrate without further input,
/// plus the escape hatch that loads a structure document from disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemKind {
    /// Fully reduced flow on the coupled pair of three-dimensional factors.
    #[serde(rename = "sl2c_ep")]
    Sl2cEp,
    /// Partially reduced flow carrying the triangular-factor group point,
    /// with an optional linear potential on it.
    #[serde(rename = "sl2c_el_on_H")]
    Sl2cElOnH,
    /// Degenerate variant with the action on the first factor deleted.
    #[serde(rename = "semidirect_left_trivial")]
    SemidirectLeftTrivial,
    /// Degenerate variant with the action on the second factor deleted.
    #[serde(rename = "semidirect_right_trivial")]
    SemidirectRightTrivial,
    /// Structure loaded from the JSON document named by `structure_path`.
    #[serde(rename = "custom_structure")]
    CustomStructure,
}

impl SystemKind {
    /// All names accepted on the command line, in declaration order.
    pub const NAMES: [&'static str; 5] = [
        "sl2c_ep",
        "sl2c_el_on_H",
        "semidirect_left_trivial",
        "semidirect_right_trivial",
        "custom_structure",
    ];

    /// Parses a command-line system name.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "sl2c_ep" => Ok(SystemKind::Sl2cEp),
            "sl2c_el_on_H" => Ok(SystemKind::Sl2cElOnH),
            "semidirect_left_trivial" => Ok(SystemKind::SemidirectLeftTrivial),
            "semidirect_right_trivial" => Ok(SystemKind::SemidirectRightTrivial),
            "custom_structure" => Ok(SystemKind::CustomStructure),
            other => Err(MechError::Config(format!(
                "unknown system `{other}` (expected one of: {})",
                Self::NAMES.join(", ")
            ))),
        }
    }
}

/// Time-stepping scheme selector.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchemeKind {
    /// Classical fourth-order Runge–Kutta (the default).
    #[default]
    Rk4,
    /// Explicit Euler, for convergence baselines.
    Euler,
}

/// Step size, final time, and scheme.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegratorSection {
    /// Step size (must be positive and smaller than `t_end`).
    pub step: f64,
    /// Final time; the run covers `t ∈ [0, t_end]`.
    pub t_end: f64,
    /// Scheme; defaults to RK4 when omitted.
    #[serde(default)]
    pub scheme: SchemeKind,
}

/// Initial body velocities, with optional group points for the partially
/// reduced system: the unitary factor as a 2×2 complex matrix given as
/// `[re, im]` entry pairs in row-major order, the triangular factor as its
/// chart triple.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialSection {
    /// Velocity in the first factor.
    pub xi: Vec<f64>,
    /// Velocity in the second factor.
    pub eta: Vec<f64>,
    /// Optional unitary-factor point; validated against the group shape
    /// but not consumed by any reduced flow (the CSV schema carries the
    /// reduced state only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_a: Option<[[f64; 2]; 4]>,
    /// Optional triangular-factor point `(a, b, c)`, `1 + c > 0`; the
    /// partially reduced system starts its group trajectory here
    /// (identity when omitted).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_b: Option<[f64; 3]>,
}

/// Linear potential `V(B) = χ · (a, b, c)` on the triangular factor.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialSection {
    /// Coefficient triple χ.
    pub chi: Vec<f64>,
}

/// A complete run request.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Which system to integrate.
    pub system: SystemKind,
    /// Inertia block on the first factor, row-major.
    pub inertia_1: Vec<Vec<f64>>,
    /// Inertia block on the second factor, row-major.
    pub inertia_2: Vec<Vec<f64>>,
    /// Initial state.
    pub initial: InitialSection,
    /// Optional potential (only meaningful for the partially reduced
    /// system, which is the only flow that sees the group point).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub potential: Option<PotentialSection>,
    /// Integrator settings.
    pub integrator: IntegratorSection,
    /// Artifact path prefix: the run writes `<output>.csv` and
    /// `<output>.meta.json`.
    pub output: String,
    /// Structure document to load when `system` is `custom_structure`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_path: Option<String>,
}

impl RunConfig {
    /// Loads and parses a config file, with one-line diagnostics for a
    /// missing file or malformed JSON.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| MechError::Config(format!(
            "cannot read config {}: {e}",
            path.display()
        )))?;
        serde_json::from_str(&text).map_err(|e| {
            MechError::Config(format!("invalid config {}: {e}", path.display()))
        })
    }

    /// The inertia blocks as matrices, validated square and mutually
    /// consistent with the given factor dimensions.
    pub fn inertia_matrices(&self, dim_g: usize, dim_h: usize) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
        Ok((
            matrix_from_rows("inertia_1", &self.inertia_1, dim_g)?,
            matrix_from_rows("inertia_2", &self.inertia_2, dim_h)?,
        ))
    }

    /// The initial velocities as dynamic vectors, validated against the
    /// factor dimensions.
    pub fn initial_velocities(&self, dim_g: usize, dim_h: usize) -> Result<(DVector<f64>, DVector<f64>)> {
        if self.initial.xi.len() != dim_g {
            return Err(MechError::Config(format!(
                "initial.xi has length {}, the first factor has dimension {dim_g}",
                self.initial.xi.len()
            )));
        }
        if self.initial.eta.len() != dim_h {
            return Err(MechError::Config(format!(
                "initial.eta has length {}, the second factor has dimension {dim_h}",
                self.initial.eta.len()
            )));
        }
        Ok((
            DVector::from_column_slice(&self.initial.xi),
            DVector::from_column_slice(&self.initial.eta),
        ))
    }

    /// The optional unitary-factor point as a 2×2 complex matrix.
    pub fn group_a_matrix(&self) -> Option<Matrix2<Complex<f64>>> {
        self.initial.group_a.map(|rows| {
            Matrix2::new(
                Complex::new(rows[0][0], rows[0][1]),
                Complex::new(rows[1][0], rows[1][1]),
                Complex::new(rows[2][0], rows[2][1]),
                Complex::new(rows[3][0], rows[3][1]),
            )
        })
    }
}

/// Builds one inertia block from its row-major JSON form.
fn matrix_from_rows(what: &str, rows: &[Vec<f64>], expected: usize) -> Result<DMatrix<f64>> {
    let n = rows.len();
    if n != expected {
        return Err(MechError::Config(format!(
            "{what} is {n}×…, the factor has dimension {expected}"
        )));
    }
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(MechError::Config(format!(
            "{what} is not square: a row has length {} in a {n}-row matrix",
            bad.len()
        )));
    }
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal_json() -> serde_json::Value {
        serde_json::json!({
            "system": "sl2c_ep",
            "inertia_1": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            "inertia_2": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            "initial": { "xi": [1.0, 0.0, 0.0], "eta": [0.0, 0.0, 1.0] },
            "integrator": { "step": 1e-3, "t_end": 1.0 },
            "output": "out/run"
        })
    }

    #[test]
    fn minimal_config_parses_with_defaults() {
        let config: RunConfig = serde_json::from_value(minimal_json()).unwrap();
        assert_eq!(config.system, SystemKind::Sl2cEp);
        assert_eq!(config.integrator.scheme, SchemeKind::Rk4);
        assert!(config.potential.is_none());
        assert!(config.initial.group_b.is_none());
        let (i1, _) = config.inertia_matrices(3, 3).unwrap();
        assert_eq!(i1, DMatrix::identity(3, 3));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let mut v = minimal_json();
        v["surprise"] = serde_json::json!(1);
        assert!(serde_json::from_value::<RunConfig>(v).is_err());
    }

    #[test]
    fn dimension_mismatches_are_reported_by_field_name() {
        let config: RunConfig = serde_json::from_value(minimal_json()).unwrap();
        let err = config.inertia_matrices(4, 3).unwrap_err();
        assert!(err.to_string().contains("inertia_1"), "{err}");
        let err = config.initial_velocities(3, 4).unwrap_err();
        assert!(err.to_string().contains("initial.eta"), "{err}");
    }

    #[test]
    fn system_names_round_trip_between_cli_and_json() {
        for name in SystemKind::NAMES {
            let kind = SystemKind::parse(name).unwrap();
            let json = serde_json::to_value(kind).unwrap();
            assert_eq!(json, serde_json::json!(name));
        }
        assert!(SystemKind::parse("sl2c").is_err());
    }
}
