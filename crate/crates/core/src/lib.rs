//! Learner performance based behavior (LPB) optimization toolkit.
//!
//! A population-based metaheuristic built on GA variation operators and a
//! three-tier selection scheme, packaged with the apparatus needed to
//! benchmark it: classical, composite, fixed-dimension and CEC 2019 test
//! functions, GA and PSO baselines under identical budgets, Wilcoxon
//! rank-sum significance testing, and a permutation-encoded solver for
//! one-to-one assignment problems with a Hungarian-method oracle.
//!
//! Everything is deterministic per seed: batch experiments derive one
//! sub-stream per (function, run) pair, so results do not depend on
//! thread scheduling or execution order.

pub mod baselines;
pub mod benchmarks;
pub mod error;
pub mod gap;
pub mod individual;
pub mod lpb;
pub mod operators;
pub mod problem;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};
pub use individual::{FitnessOrdering, Genes, Individual, Sense};
pub use lpb::{LpbParams, RunRecord};
pub use problem::{EvalCounter, ObjectiveProblem};
pub use rng::{derive_seed, SeededRng};
