//! Batch experiment harness for the LPB optimization toolkit.
//!
//! The `lpb` binary wraps this library; the pieces are public so
//! integration tests can drive experiments without spawning processes.

pub mod config;
pub mod harness;

pub use config::{expand_function_list, Algorithm, ExperimentConfig};
pub use harness::{
    emit_all, emit_convergence_csv, emit_runs_csv, emit_significance_csv, emit_summary_csv,
    read_runs_csv, run_experiment, ExperimentResult, FunctionSummary, LabeledRecord,
};
