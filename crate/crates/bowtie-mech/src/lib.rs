//! Batch front-end for the matched-pair mechanics stack.
//!
//! Three operations, all non-interactive:
//!
//! * **run** — integrate a system described by a JSON config and write a
//!   trajectory CSV plus a metadata JSON ([`run::run_from_path`]);
//! * **verify** — execute the eight seeded residual suites and print a
//!   JSON report ([`verify::verify_report`]);
//! * **export** — serialize a named system's structure as a JSON document
//!   that the config path can load back ([`systems::export_structure`]).
//!
//! Exit-code contract (enforced by the binary through
//! [`MechError::exit_code`]): 0 success, 2 usage or config problem,
//! 3 numerical abort. `verify` exits 0 exactly when every suite passes;
//! a failing suite is report content, not a process error, and exits 1.
//!
//! Determinism contract: identical config produces byte-identical CSV,
//! identical seed produces a byte-identical verification report. Wall
//! time appears only in run metadata, never in reports.

pub mod config;
mod error;
pub mod run;
pub mod systems;
pub mod verify;

pub use config::{RunConfig, SystemKind};
pub use error::{MechError, Result};
pub use run::{run, run_from_path, RunSummary};
pub use systems::{export_structure, semidirect_structure, structure_for};
pub use verify::{verify_report, verify_report_with, Corruption, Tolerances, VerifyReport};
