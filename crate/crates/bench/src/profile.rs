use std::fmt;

use anysort_core::{footrule, make_sorter, max_footrule, rho_estimate, Algorithm, ComparisonRecord, OrderMatrix, Step};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;
use crate::error::Result;
use crate::output;
use crate::seed::trial_permutation;
use crate::stats::Summary;
use crate::termination::pool;

/// How an interrupted run is turned into an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Estimator {
    /// The arrangement maintained by the algorithm itself.
    Native,
    /// Score-and-sort by `ρ = d/(d+a)` over the comparisons made so far.
    Rho,
}

impl fmt::Display for Estimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Estimator::Native => "native",
            Estimator::Rho => "rho",
        })
    }
}

/// Estimators reported for each algorithm unless configured otherwise.
pub fn default_estimators(algorithm: Algorithm) -> Vec<Estimator> {
    use Estimator::*;
    match algorithm {
        Algorithm::FordJohnson | Algorithm::BottomupMerge | Algorithm::Multizip | Algorithm::Corsort => vec![Rho],
        Algorithm::Quicksort | Algorithm::TopdownMerge => vec![Native],
        Algorithm::Asort | Algorithm::BinaryInsertion | Algorithm::Heapsort | Algorithm::Shellsort => {
            vec![Native, Rho]
        }
    }
}

/// `points` evenly spaced values in `0..=max`, merged with `extra`.
pub fn checkpoint_grid(max: usize, points: usize, extra: &[usize]) -> Vec<usize> {
    let steps = points.max(2) - 1;
    let mut grid: Vec<usize> = (0..=steps)
        .map(|i| ((i * max) as f64 / steps as f64).round() as usize)
        .chain(extra.iter().copied())
        .collect();
    grid.sort_unstable();
    grid.dedup();
    grid
}

/// Checkpoints added when `n` is 1000, where the published table sits.
const TABLE_CHECKPOINTS: [usize; 3] = [4000, 6000, 8000];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub algorithm: Algorithm,
    pub estimator: Estimator,
    pub n: usize,
    pub k: usize,
    pub trials: usize,
    /// Footrule error normalized by `⌊n²/2⌋`.
    pub error: Summary,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ProfileSeries {
    pub rows: Vec<ProfileRow>,
}

impl ProfileSeries {
    pub fn get(&self, algorithm: Algorithm, estimator: Estimator, n: usize, k: usize) -> Option<&ProfileRow> {
        self.rows
            .iter()
            .find(|r| r.algorithm == algorithm && r.estimator == estimator && r.n == n && r.k == k)
    }

    /// Rows of one curve, in increasing `k`.
    pub fn curve(&self, algorithm: Algorithm, estimator: Estimator, n: usize) -> Vec<&ProfileRow> {
        self.rows
            .iter()
            .filter(|r| r.algorithm == algorithm && r.estimator == estimator && r.n == n)
            .collect()
    }
}

/// One complete run: its history and, if requested, the native error after
/// every prefix of it.
struct Run {
    history: Vec<ComparisonRecord>,
    native: Option<Vec<u64>>,
}

fn record_run(algorithm: Algorithm, n: usize, seed: u64, trial: u64, native: bool) -> Result<Run> {
    let truth = trial_permutation(seed, n, trial);
    let mut s = make_sorter(algorithm, n)?;
    let native_error = |s: &anysort_core::Sorter| -> Result<u64> {
        let est = s.native_estimate().expect("checked by the caller");
        Ok(footrule(&est, &truth)?)
    };
    let mut errors = Vec::new();
    if native {
        errors.push(native_error(&s)?);
    }
    while let Step::Compare(p) = s.next_pair()? {
        s.record_outcome(p, if truth.less(p.i, p.j) { p.i } else { p.j })?;
        if native {
            errors.push(native_error(&s)?);
        }
    }
    Ok(Run { history: s.history().to_vec(), native: native.then_some(errors) })
}

/// ρ error after the first `k` comparisons, for each `k` of `grid`.
fn rho_errors(run: &Run, n: usize, seed: u64, trial: u64, grid: &[usize]) -> Result<Vec<u64>> {
    let truth = trial_permutation(seed, n, trial);
    let mut m = OrderMatrix::new(n);
    let mut applied = 0;
    let mut out = Vec::with_capacity(grid.len());
    for &k in grid {
        if k >= run.history.len() {
            out.push(0);
            continue;
        }
        for rec in &run.history[applied..k] {
            m.insert_record(*rec)?;
        }
        applied = k;
        out.push(footrule(&rho_estimate(&m), &truth)?);
    }
    Ok(out)
}

fn profile_one(
    cfg: &ExperimentConfig,
    algorithm: Algorithm,
    n: usize,
    pool: &rayon::ThreadPool,
) -> Result<Vec<ProfileRow>> {
    let trials = cfg.trials_for(n);
    let estimators: Vec<Estimator> = cfg
        .estimators
        .clone()
        .unwrap_or_else(|| default_estimators(algorithm))
        .into_iter()
        .filter(|&e| e != Estimator::Native || algorithm.has_native_estimator())
        .collect();
    let want_native = estimators.contains(&Estimator::Native);
    let runs: Vec<Run> = pool.install(|| {
        (0..trials as u64)
            .into_par_iter()
            .map(|t| record_run(algorithm, n, cfg.seed, t, want_native))
            .collect::<Result<_>>()
    })?;
    let longest = runs.iter().map(|r| r.history.len()).max().unwrap_or(0);
    let mut extra = cfg.extra_checkpoints.clone();
    if n == 1000 {
        extra.extend(TABLE_CHECKPOINTS);
    }
    let grid = checkpoint_grid((longest as f64 * 1.1).ceil() as usize, cfg.checkpoints, &extra);
    let norm = max_footrule(n).max(1) as f64;

    let mut rows = Vec::new();
    for estimator in estimators {
        let errors: Vec<Vec<u64>> = match estimator {
            Estimator::Native => runs
                .iter()
                .map(|r| {
                    let e = r.native.as_ref().expect("recorded above");
                    grid.iter().map(|&k| e.get(k).copied().unwrap_or(0)).collect()
                })
                .collect(),
            Estimator::Rho => pool.install(|| {
                runs.par_iter()
                    .enumerate()
                    .map(|(t, r)| rho_errors(r, n, cfg.seed, t as u64, &grid))
                    .collect::<Result<_>>()
            })?,
        };
        for (g, &k) in grid.iter().enumerate() {
            let samples: Vec<f64> = errors.iter().map(|e| e[g] as f64 / norm).collect();
            rows.push(ProfileRow { algorithm, estimator, n, k, trials, error: Summary::of(&samples)? });
        }
    }
    Ok(rows)
}

pub fn run_profile(cfg: &ExperimentConfig) -> Result<ProfileSeries> {
    cfg.validate()?;
    let pool = pool(cfg.jobs)?;
    let mut series = ProfileSeries::default();
    for &n in &cfg.sizes {
        for &algorithm in &cfg.algorithms {
            series.rows.extend(profile_one(cfg, algorithm, n, &pool)?);
        }
    }
    if let Some(path) = &cfg.output {
        output::save_profile(path, cfg, &series)?;
    }
    Ok(series)
}
