//! Command-line front end and benchmark sweeps for `apriori-core`.
//!
//! The `apriori-bench` binary has four subcommands: `mine`, `bench-support`,
//! `bench-size` and `gen`. Sweeps run both miners at every point, refuse to
//! report when their itemsets differ, and emit one CSV row per point with
//! the best-of-R wall time and the join/prune counters of each miner.

pub mod cli;
pub mod error;
pub mod sweep;

pub use error::CliError;
pub use sweep::{
    improvement_pct, run_point, size_sweep, support_sweep, write_rows, BenchRow, SweepConfig,
};
