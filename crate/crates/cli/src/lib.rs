//! Command-line front end: argument parsing, problem files, reports.

pub mod args;
pub mod error;
pub mod problem;
pub mod report;
pub mod run;

pub use args::{parse_args, Command, RunConfig, USAGE};
pub use error::CliError;
pub use report::{Format, Report};
pub use run::{run, Outcome};
