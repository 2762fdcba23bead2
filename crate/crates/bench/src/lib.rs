//! Test problems, experiment runner and CSV output for the boundary knot
//! method.

pub mod config;
pub mod error;
pub mod experiment;
pub mod metric;
pub mod output;
pub mod problems;

pub use config::{BoundaryCounts, ConfigFile, ExperimentConfig, Precision};
pub use error::{BenchError, Result};
pub use experiment::{convergence_sweep, run, ExperimentResult};
pub use problems::{builtin_problems, find_problem, TestProblem};
