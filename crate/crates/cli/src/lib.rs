//! Command-line front end for [`zerosum`].
//!
//! The binary is a thin wrapper around [`run`], which writes the rendered
//! output to any writer so the commands can be tested in-process.

pub mod args;
pub mod commands;
pub mod error;
pub mod files;
pub mod report;
pub mod sample;
pub mod table;
pub mod verify;

use std::io::Write;

pub use args::Cli;
pub use error::{CliError, Result};

use args::Command;
use report::render;

/// Runs one command and renders its records to `out`.
///
/// A failed verification still prints its report before returning
/// [`CliError::VerifyFailed`].
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let records = match &cli.command {
        Command::Bound(a) => commands::bound(a)?,
        Command::Construct(a) => commands::construct(a)?,
        Command::Solve(a) => commands::solve(a)?,
        Command::Table(a) => table::run(a)?,
        Command::Verify(a) => {
            let (records, failed) = verify::run(a)?;
            render(&records, cli.format, out)?;
            if failed > 0 {
                return Err(CliError::VerifyFailed { failed, total: records.len() });
            }
            return Ok(());
        }
    };
    render(&records, cli.format, out)
}

/// Caps the global thread pool from `ZS_THREADS`, if set.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("ZS_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Input(format!("ZS_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))
}
