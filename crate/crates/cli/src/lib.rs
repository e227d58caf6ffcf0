//! Library side of the `lozenge` binary: argument types, report rendering
//! and the verification suites.

mod commands;
mod report;
pub mod suites;

pub use commands::{closed_variant_for, execute, Cli, CliError, Command, CountMethod, EvalMethod, Explore, FormulaOrOracle};
pub use report::{Check, Format, Report, Table};
pub use suites::{run_suite, Suite};
