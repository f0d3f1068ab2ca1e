//! Command-line surface for the k-plex solver: single-instance solves,
//! directory benchmarks with CSV statistics, and the brute-force oracle.
//!
//! The binary in `main.rs` is a thin argument-parsing layer over the
//! functions here, so integration tests can drive the exact command
//! behavior in-process.

pub mod commands;
pub mod load;
pub mod record;

pub use commands::{
    bench_summary, run_bench, run_oracle, run_solve, solve_summary, BenchConfig, OracleOutcome,
    SolveOutcome,
};
pub use load::{load_instance, FormatChoice, LoadedInstance};
pub use record::{percent_permille, CsvWriter, RunRecord, RunStatus};
