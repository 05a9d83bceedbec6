use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

/// `log₂(n!)` summed term by term.
pub fn lower_bound_bits(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).log2()).sum()
}

/// Nearest-rank empirical quantile: the `⌈q·N⌉`-th smallest sample (1-based).
pub fn quantile(samples: &[f64], q: f64) -> Result<f64> {
    if samples.is_empty() {
        return Err(BenchError::Config("quantile of an empty sample".into()));
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(BenchError::Config(format!("quantile level {q} outside [0, 1]")));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(sorted[rank_index(q, sorted.len())])
}

fn rank_index(q: f64, len: usize) -> usize {
    let x = q * len as f64;
    // 0.025 * 1000 is 25.000000000000004 in binary
    let x = if (x - x.round()).abs() < 1e-9 { x.round() } else { x };
    (x.ceil() as usize).clamp(1, len) - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub median: f64,
    pub q025: f64,
    pub q975: f64,
}

impl Summary {
    pub fn of(samples: &[f64]) -> Result<Self> {
        if samples.is_empty() {
            return Err(BenchError::Config("summary of an empty sample".into()));
        }
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        let at = |q| sorted[rank_index(q, sorted.len())];
        Ok(Self { median: at(0.5), q025: at(0.025), q975: at(0.975) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_rank() {
        let s: Vec<f64> = (1..=100).map(f64::from).collect();
        assert_eq!(quantile(&s, 0.025).unwrap(), 3.0);
        assert_eq!(quantile(&s, 0.5).unwrap(), 50.0);
        assert_eq!(quantile(&s, 0.975).unwrap(), 98.0);
        assert_eq!(quantile(&s, 0.0).unwrap(), 1.0);
        assert_eq!(quantile(&s, 1.0).unwrap(), 100.0);
        let t: Vec<f64> = (1..=1000).map(f64::from).collect();
        assert_eq!(quantile(&t, 0.025).unwrap(), 25.0);
    }

    #[test]
    fn single_sample_and_empty() {
        for q in [0.0, 0.025, 0.5, 1.0] {
            assert_eq!(quantile(&[4.5], q).unwrap(), 4.5);
        }
        assert!(quantile(&[], 0.5).is_err());
        assert!(quantile(&[1.0], 1.5).is_err());
    }

    #[test]
    fn summary_is_ordered() {
        let s = Summary::of(&[3.0, 1.0, 2.0, 5.0, 4.0]).unwrap();
        assert!(s.q025 <= s.median && s.median <= s.q975);
        assert_eq!(s.median, 3.0);
    }

    #[test]
    fn bound_small_values() {
        assert_eq!(lower_bound_bits(1), 0.0);
        assert_eq!(lower_bound_bits(2), 1.0);
        assert!((lower_bound_bits(8) - 40320f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn bound_matches_stirling_expansion() {
        let n = 1024.0f64;
        let approx = n * n.log2() - n / std::f64::consts::LN_2 + (2.0 * std::f64::consts::PI * n).log2() / 2.0;
        assert!((lower_bound_bits(1024) - approx).abs() < 0.01);
    }
}
