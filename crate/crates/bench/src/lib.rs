//! Seeded experiments over the anytime sorters.
//!
//! Two experiments are provided. [`run_termination`] counts the comparisons
//! each algorithm needs to finish and reports the overhead over `log₂(n!)`.
//! [`run_profile`] interrupts every run on a grid of comparison counts and
//! aggregates the normalized footrule error of the estimate at each point.
//!
//! Every trial draws its input from a seed derived from the master seed, the
//! list size and the trial index, so results do not depend on the number of
//! worker threads or on which algorithms are run together.

pub mod config;
pub mod error;
pub mod output;
pub mod profile;
pub mod seed;
pub mod stats;
pub mod termination;

pub use config::{default_trials, ExperimentConfig};
pub use error::{BenchError, Result};
pub use profile::{checkpoint_grid, default_estimators, run_profile, Estimator, ProfileRow, ProfileSeries};
pub use seed::{random_permutation, trial_permutation, trial_seed};
pub use stats::{lower_bound_bits, quantile, Summary};
pub use termination::{comparison_counts, run_termination, TerminationRow, TerminationStats};
