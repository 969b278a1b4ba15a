//! Std companion to `lagflow-core`: polynomial and report file formats,
//! seeded random batches, and the `lagflow` command-line front end.

pub mod batch;
pub mod cli;
pub mod error;
pub mod generate;
pub mod literal;
pub mod report;

pub use error::CliError;
