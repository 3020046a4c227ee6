//! Structures behind the named systems, and the structure-document
//! import/export paths.

use std::path::Path;

use bowtie_algebra::{MatchedPairStructure, StructureDocument};
use bowtie_dynamics::TrivialAction;
use bowtie_sl2c::{k_bracket, matched_structure, mutual_inf_actions, Vec3};
use nalgebra::DVector;
use sha2::{Digest, Sha256};

use crate::config::SystemKind;
use crate::error::{MechError, Result};

fn to_vec3(v: &DVector<f64>) -> Vec3 {
    Vec3::new(v[0], v[1], v[2])
}

fn to_dvector(v: &Vec3) -> DVector<f64> {
    DVector::from_column_slice(v.as_slice())
}

/// The coupled structure with one mutual action replaced by the zero map.
/// The factor brackets and the surviving action are the same closures the
/// full structure uses, so the degenerate right-hand sides can be compared
/// against term deletion exactly.
pub fn semidirect_structure(trivial: TrivialAction) -> MatchedPairStructure {
    let act_left: bowtie_algebra::BilinearMap = match trivial {
        TrivialAction::LeftTrivial => Box::new(|_, _| DVector::zeros(3)),
        TrivialAction::RightTrivial => {
            Box::new(|eta, xi| to_dvector(&mutual_inf_actions(&to_vec3(eta), &to_vec3(xi)).0))
        }
    };
    let act_right: bowtie_algebra::BilinearMap = match trivial {
        TrivialAction::LeftTrivial => {
            Box::new(|eta, xi| to_dvector(&mutual_inf_actions(&to_vec3(eta), &to_vec3(xi)).1))
        }
        TrivialAction::RightTrivial => Box::new(|_, _| DVector::zeros(3)),
    };
    MatchedPairStructure::new(
        3,
        3,
        Box::new(|x1, x2| to_dvector(&to_vec3(x1).cross(&to_vec3(x2)))),
        Box::new(|y1, y2| to_dvector(&k_bracket(&to_vec3(y1), &to_vec3(y2)))),
        act_left,
        act_right,
    )
    .expect("dimensions 3, 3 are valid")
}

/// Builds the structure a system runs on. `structure_path` is consulted
/// only by `custom_structure`, which requires it.
pub fn structure_for(system: SystemKind, structure_path: Option<&Path>) -> Result<MatchedPairStructure> {
    match system {
        SystemKind::Sl2cEp | SystemKind::Sl2cElOnH => Ok(matched_structure()),
        SystemKind::SemidirectLeftTrivial => Ok(semidirect_structure(TrivialAction::LeftTrivial)),
        SystemKind::SemidirectRightTrivial => Ok(semidirect_structure(TrivialAction::RightTrivial)),
        SystemKind::CustomStructure => {
            let path = structure_path.ok_or_else(|| {
                MechError::Config("system `custom_structure` requires `structure_path`".into())
            })?;
            let text = std::fs::read_to_string(path).map_err(|e| {
                MechError::Config(format!("cannot read structure document {}: {e}", path.display()))
            })?;
            let doc = StructureDocument::from_json(&text).map_err(|e| {
                MechError::Config(format!("invalid structure document {}: {e}", path.display()))
            })?;
            doc.to_structure()
                .map_err(|e| MechError::Config(format!("unusable structure document: {e}")))
        }
    }
}

/// Serializes the structure behind a named system as a JSON document.
/// `custom_structure` is rejected: it names the import path, there is no
/// built-in structure to write for it.
pub fn export_structure(system: SystemKind, path: &Path) -> Result<()> {
    if system == SystemKind::CustomStructure {
        return Err(MechError::Config(
            "`custom_structure` is the import path; export one of the built-in systems".into(),
        ));
    }
    let structure = structure_for(system, None)?;
    let json = document_json(&structure)?;
    std::fs::write(path, json).map_err(|e| MechError::Io { path: path.into(), source: e })
}

/// The JSON document for a structure (trailing newline included, so the
/// artifact is a well-formed text file).
pub fn document_json(structure: &MatchedPairStructure) -> Result<String> {
    let doc = StructureDocument::from_structure(structure);
    let mut json = doc
        .to_json()
        .map_err(|e| MechError::Config(format!("cannot serialize structure document: {e}")))?;
    json.push('\n');
    Ok(json)
}

/// SHA-256 of the structure's JSON document, recorded in run metadata so
/// an artifact can be traced to the exact structure that produced it.
pub fn structure_digest(structure: &MatchedPairStructure) -> Result<String> {
    let json = document_json(structure)?;
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    Ok(format!("{:x}", hasher.finalize()))
}
