//! Command-line entry point; all logic lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bowtie_mech::{config::SystemKind, export_structure, run_from_path, verify::verify_report, Tolerances};

#[derive(Parser)]
#[command(name = "bowtie-mech", version, about = "Matched-pair mechanics: batch runs, verification suites, structure export")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate the system described by a JSON config; writes
    /// <output>.csv and <output>.meta.json next to the configured prefix.
    Run {
        /// Path to the run configuration.
        config: PathBuf,
    },
    /// Run the seeded verification suites and print a JSON report.
    Verify {
        /// Master seed for the suite sample generators.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance override, `name=value`; repeatable.
        #[arg(long = "tol", value_name = "NAME=VALUE")]
        tol: Vec<String>,
    },
    /// Write the structure document of a named system as JSON.
    Export {
        /// System name (e.g. `sl2c_ep`).
        system: String,
        /// Output path.
        path: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run { config } => match run_from_path(&config) {
            Ok(summary) => {
                eprintln!(
                    "wrote {} ({} rows) and {}; max energy drift {:.3e}",
                    summary.csv.display(),
                    summary.rows,
                    summary.meta.display(),
                    summary.max_energy_drift
                );
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Command::Verify { seed, tol } => {
            let mut tolerances = Tolerances::default();
            let mut usage_error = None;
            for spec in &tol {
                if let Err(e) = tolerances.apply_override(spec) {
                    usage_error = Some(e);
                    break;
                }
            }
            match usage_error {
                Some(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
                None => {
                    let report = verify_report(seed, &tolerances);
                    print!("{}", report.to_json());
                    if report.pass {
                        0
                    } else {
                        1
                    }
                }
            }
        }
        Command::Export { system, path } => {
            let result = SystemKind::parse(&system).and_then(|kind| export_structure(kind, &path));
            match result {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
    };
    ExitCode::from(code as u8)
}
