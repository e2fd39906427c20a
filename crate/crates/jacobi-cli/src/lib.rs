//! Library side of the verification harness: configuration, report
//! plumbing, and the per-module check suites. The `jacobi` binary is a thin
//! wrapper over these.

pub mod complexarg;
pub mod config;
pub mod report;
pub mod suites;
pub mod tolerances;
