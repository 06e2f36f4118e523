//! Library side of the `ppwb` command-line tool.

pub mod commands;
pub mod report;
pub mod suites;

pub use commands::{CliError, Outcome};
pub use report::{Check, Status, VerifyReport};
pub use suites::run_suite;
