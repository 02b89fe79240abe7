//! File formats, reports and subcommands behind the `leibniz` binary.

pub mod commands;
pub mod error;
pub mod files;
pub mod report;

pub use error::CliError;
