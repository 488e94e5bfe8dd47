//! Command-line front end for `tailbound`.
//!
//! Exit codes: 0 success, 2 no near-threshold state, 3 empty spectrum,
//! 64 usage, 70 numerical or resource failure, 73 output not writable.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

mod args;
mod compare;
mod report;
mod scatlen;
mod solve;
mod threshold;
mod units;

pub use args::{Cli, Command, CompareArgs, SpecArgs, ThresholdArgs};
pub use compare::{comparison_rows, write_csv, ComparisonRow, CSV_HEADER};
pub use units::Units;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_NEAR_THRESHOLD: i32 = 2;
pub const EXIT_NO_BOUND_STATES: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_SOFTWARE: i32 = 70;
pub const EXIT_CANT_CREATE: i32 = 73;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("no near-threshold state: {0}")]
    NoNearThreshold(String),
    #[error("no bound states")]
    NoBoundStates,
    #[error("{0}")]
    Numeric(tailbound::Error),
    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::NoNearThreshold(_) => EXIT_NO_NEAR_THRESHOLD,
            CliError::NoBoundStates => EXIT_NO_BOUND_STATES,
            CliError::Numeric(_) => EXIT_SOFTWARE,
            CliError::Io { .. } => EXIT_CANT_CREATE,
        }
    }
}

impl From<tailbound::Error> for CliError {
    fn from(e: tailbound::Error) -> Self {
        use tailbound::Error as E;
        match e {
            E::Domain { .. } => CliError::Usage(e.to_string()),
            E::NoNearThresholdState { .. } => CliError::NoNearThreshold(e.to_string()),
            E::NoBoundState => CliError::NoBoundStates,
            other => CliError::Numeric(other),
        }
    }
}

/// Parses `argv` and runs the command, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Threshold(a) => threshold::run(a, out, err),
        Command::Solve(a) => solve::run(a, out),
        Command::Compare(a) => compare::run(a, out, err),
        Command::Scatlen(a) => scatlen::run(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
