//! Command-line driver: configuration, the end-to-end `demo` pipeline, the
//! smaller diagnostic commands and their JSON reports.

pub mod commands;
pub mod config;
pub mod demo;
pub mod report;

pub use config::RunConfig;
pub use demo::run_demo;
pub use report::{Check, Report, SCHEMA_VERSION};

/// Exit code for bad input or configuration.
pub const EXIT_INPUT: i32 = 2;
