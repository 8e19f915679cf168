//! `casimir-liv`: Casimir observables with a Lorentz-invariance-violation
//! correction, SME photon-sector constitutive matrices, and the derived
//! experimental bound, from the command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 missing or unreadable file,
//! 4 domain error from the computation itself.

use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod config;
mod error;
mod input;
mod output;
mod presets;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
