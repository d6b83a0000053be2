//! Std front end for `reduct-core`: CSV ingestion, report rendering and the
//! `reduct-forge` command line.

pub mod cli;
pub mod load;
pub mod report;

pub use load::{load_csv, LoadError, LoadOptions};
