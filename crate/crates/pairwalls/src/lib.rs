//! Command-line companion to `pairwalls-core`: argument parsing, the chamber
//! report and its renderings.

pub mod error;
pub mod parallel;
pub mod parse;
pub mod presets;
pub mod render;
pub mod report;

pub use error::{CliError, CliResult};
pub use report::{build_report, ChamberReport, ReportOptions};
