//! Frontend plumbing for the `norlund` binary: argument types, command
//! execution and JSON/CSV/text rendering.

pub mod cli;
pub mod output;
pub mod run;

pub use run::{execute, CliError, Outcome};

/// Environment variable holding the tolerance multiplier.
pub const TOLERANCE_ENV: &str = "NORLUND_TOLERANCE_SCALE";
