use std::process::ExitCode;

use clap::Parser;
use norlund::cli::Cli;
use norlund::{execute, TOLERANCE_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = std::env::var(TOLERANCE_ENV).ok();
    match execute(&cli, env.as_deref()) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
