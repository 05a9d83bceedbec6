use std::path::PathBuf;

use anysort_core::Algorithm;
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::profile::Estimator;

/// Trials used when the configuration leaves the count open.
pub fn default_trials(n: usize) -> usize {
    if n <= 256 {
        1000
    } else {
        100
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithms: Vec<Algorithm>,
    pub sizes: Vec<usize>,
    /// `None` picks [`default_trials`] per size.
    pub trials: Option<usize>,
    pub seed: u64,
    /// Grid points of a performance profile, before the fixed extras.
    pub checkpoints: usize,
    /// Extra profile checkpoints, added for every size.
    pub extra_checkpoints: Vec<usize>,
    /// Estimators per algorithm; `None` uses [`crate::default_estimators`].
    pub estimators: Option<Vec<Estimator>>,
    pub output: Option<PathBuf>,
    /// Also write `<output>.long.csv` with one value per row.
    pub long_format: bool,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: Algorithm::ALL.to_vec(),
            sizes: vec![8, 16, 32, 64, 128, 256],
            trials: None,
            seed: 0,
            checkpoints: 200,
            extra_checkpoints: Vec::new(),
            estimators: None,
            output: None,
            long_format: false,
            jobs: 0,
        }
    }
}

impl ExperimentConfig {
    pub fn trials_for(&self, n: usize) -> usize {
        self.trials.unwrap_or_else(|| default_trials(n))
    }

    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(BenchError::Config("no algorithm selected".into()));
        }
        if self.sizes.is_empty() {
            return Err(BenchError::Config("no list size selected".into()));
        }
        if let Some(n) = self.sizes.iter().find(|&&n| n == 0) {
            return Err(BenchError::Config(format!("list size {n} must be at least 1")));
        }
        if self.trials == Some(0) {
            return Err(BenchError::Config("trials must be at least 1".into()));
        }
        if self.checkpoints < 2 {
            return Err(BenchError::Config("at least 2 checkpoints are needed".into()));
        }
        if matches!(&self.estimators, Some(e) if e.is_empty()) {
            return Err(BenchError::Config("empty estimator list".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_follow_list_size() {
        let c = ExperimentConfig::default();
        assert_eq!(c.trials_for(256), 1000);
        assert_eq!(c.trials_for(1000), 100);
        c.validate().unwrap();
    }

    #[test]
    fn invalid_values() {
        let bad = [
            ExperimentConfig { trials: Some(0), ..Default::default() },
            ExperimentConfig { checkpoints: 1, ..Default::default() },
            ExperimentConfig { sizes: vec![0], ..Default::default() },
            ExperimentConfig { algorithms: vec![], ..Default::default() },
        ];
        for c in bad {
            assert!(matches!(c.validate(), Err(BenchError::Config(_))));
        }
    }

    #[test]
    fn json_fills_missing_fields() {
        let c: ExperimentConfig = serde_json::from_str(r#"{"algorithms":["corsort"],"seed":9}"#).unwrap();
        assert_eq!(c.algorithms, vec![Algorithm::Corsort]);
        assert_eq!(c.seed, 9);
        assert_eq!(c.checkpoints, 200);
        assert!(serde_json::from_str::<ExperimentConfig>(r#"{"sead":9}"#).is_err());
    }
}
