//! Config files, reports and the `spinobstruct` command line front end over
//! [`spinobstruct_core`].

pub mod analyze;
pub mod cli;
pub mod config;
pub mod random;
pub mod report;
pub mod suites;

pub use analyze::{analyze, analyze_specs, AnalyzeOptions, RunError};
pub use config::{Config, ConfigError, GroupTable};
pub use report::AnalysisReport;
