//! File formats and the `braidmon` command line on top of `braidmon-core`.

pub mod cli;
pub mod formats;

pub use braidmon_core as core;
