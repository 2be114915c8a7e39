//! Command-line front end: variety files, run reports, and the `lodeg`
//! subcommands.

pub mod app;
pub mod input;
pub mod report;

pub use app::{run, Outcome};
