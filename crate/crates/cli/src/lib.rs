//! The `powid` command-line driver. Each command builds a [`Report`]; the
//! binary renders it and maps errors to exit codes.

pub mod args;
pub mod commands;
pub mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};

use powid_core::Error;

pub use args::{Cli, Command, Format, Options};
pub use report::{Cell, Report};

pub const EXIT_BAD_CONFIG: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_CROSS_CHECK: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("bad configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] Error),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_BAD_CONFIG,
            CliError::Core(Error::GuardExceeded { .. }) => EXIT_GUARD,
            CliError::Core(Error::CrossCheck(_) | Error::FactorizationFailed(_)) => EXIT_CROSS_CHECK,
            CliError::Core(_) => EXIT_BAD_CONFIG,
            CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

/// Runs one command and writes its report; returns the process exit code.
pub fn execute(cli: &Cli) -> CliResult<i32> {
    let report = commands::run(cli.command, &cli.opts)?;
    match &cli.opts.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            report.write(cli.opts.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            report.write(cli.opts.format, &mut w)?;
            w.flush()?;
        }
    }
    if report.failures.is_empty() {
        Ok(0)
    } else {
        for f in &report.failures {
            eprintln!("cross-check failed: {f}");
        }
        Ok(EXIT_CROSS_CHECK)
    }
}
