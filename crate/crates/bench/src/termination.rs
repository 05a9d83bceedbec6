use anysort_core::{run_to_completion, Algorithm};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;
use crate::error::{BenchError, Result};
use crate::output;
use crate::seed::trial_permutation;
use crate::stats::{lower_bound_bits, Summary};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TerminationRow {
    pub algorithm: Algorithm,
    pub n: usize,
    pub trials: usize,
    /// Relative overhead over `log₂(n!)`, in percent.
    pub overhead: Summary,
    pub mean_comparisons: f64,
}

impl TerminationRow {
    pub fn mean_overhead(&self) -> f64 {
        let lb = lower_bound_bits(self.n);
        if lb == 0.0 {
            0.0
        } else {
            100.0 * (self.mean_comparisons - lb) / lb
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TerminationStats {
    pub rows: Vec<TerminationRow>,
}

impl TerminationStats {
    pub fn get(&self, algorithm: Algorithm, n: usize) -> Option<&TerminationRow> {
        self.rows.iter().find(|r| r.algorithm == algorithm && r.n == n)
    }
}

pub(crate) fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| BenchError::Pool(e.to_string()))
}

/// Comparisons needed by `algorithm` on each trial, in trial order.
pub fn comparison_counts(algorithm: Algorithm, n: usize, trials: usize, seed: u64, jobs: usize) -> Result<Vec<usize>> {
    pool(jobs)?.install(|| {
        (0..trials as u64)
            .into_par_iter()
            .map(|t| Ok(run_to_completion(algorithm, &trial_permutation(seed, n, t))?.0))
            .collect()
    })
}

/// Overhead percentage of each count relative to `log₂(n!)`.
fn overheads(counts: &[usize], n: usize) -> Vec<f64> {
    let lb = lower_bound_bits(n);
    counts
        .iter()
        .map(|&c| if lb == 0.0 { 0.0 } else { 100.0 * (c as f64 - lb) / lb })
        .collect()
}

pub fn run_termination(cfg: &ExperimentConfig) -> Result<TerminationStats> {
    cfg.validate()?;
    let mut stats = TerminationStats::default();
    for &n in &cfg.sizes {
        let trials = cfg.trials_for(n);
        for &algorithm in &cfg.algorithms {
            let counts = comparison_counts(algorithm, n, trials, cfg.seed, cfg.jobs)?;
            stats.rows.push(TerminationRow {
                algorithm,
                n,
                trials,
                overhead: Summary::of(&overheads(&counts, n))?,
                mean_comparisons: counts.iter().sum::<usize>() as f64 / trials as f64,
            });
        }
    }
    if let Some(path) = &cfg.output {
        output::save_termination(path, cfg, &stats)?;
    }
    Ok(stats)
}
