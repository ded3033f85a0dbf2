//! File formats, reports and the command line for `okares-core`.

pub mod cli;
pub mod formats;
pub mod report;
