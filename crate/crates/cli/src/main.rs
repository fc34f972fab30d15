//! `truncnorm` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O or replay mismatch, 2 invalid input, 3 sampling failure.

mod args;
mod commands;
mod output;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Rejected user input, reported with exit code 2.
#[derive(Debug)]
pub struct InvalidInput(String);

impl fmt::Display for InvalidInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InvalidInput {}

pub fn invalid(msg: impl Into<String>) -> anyhow::Error {
    InvalidInput(msg.into()).into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<InvalidInput>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<truncnorm::Error>() {
            return match e {
                truncnorm::Error::SamplingFailure { .. } | truncnorm::Error::LowAcceptance { .. } => 3,
                _ => 2,
            };
        }
    }
    1
}

fn run(cmd: &Command) -> anyhow::Result<()> {
    match cmd {
        Command::Replay(r) => commands::replay::run(r),
        _ => output::emit(cmd, commands::render(cmd)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
