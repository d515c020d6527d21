//! Command-line harness around `qmono`: scenario files, exponent sweeps,
//! CSV and SVG output, and seeded property checks.

// `!(x <= tol)` forms also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod output;
pub mod report;
pub mod scenario;
pub mod sweep;
pub mod verify;

pub use error::{CliError, Result};
pub use output::{format_number, to_csv, to_svg, write_outputs, Format};
pub use scenario::{load_scenario, parse_scenario, ExponentRange, Scenario};
pub use sweep::{evaluate, run_sweep, SweepResult, SweepRow};
pub use verify::{run_property_suite, PropertyReport};
