//! Per-item scores derived from a partial order, and the score-and-sort
//! estimator that turns any such score into an arrangement.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::order::OrderMatrix;
use crate::types::Estimate;

/// Exact ratio `d / (d + a)`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Rho {
    pub num: u32,
    pub den: u32,
}

impl Rho {
    pub fn new(num: u32, den: u32) -> Self {
        debug_assert!(den > 0);
        Self { num, den }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Rho {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Rho {}

impl PartialOrd for Rho {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rho {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

/// Descendant and ancestor counts of one item, and the scores built on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemScore {
    pub descendants: u32,
    pub ancestors: u32,
}

impl ItemScore {
    /// Amount of information known about the item, `d + a`.
    pub fn information(&self) -> u32 {
        self.descendants + self.ancestors
    }

    /// `d - a`.
    pub fn delta(&self) -> i64 {
        self.descendants as i64 - self.ancestors as i64
    }

    /// `d / (d + a)`.
    pub fn rho(&self) -> Rho {
        Rho::new(self.descendants, self.information())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoreSet {
    pub items: Vec<ItemScore>,
}

impl ScoreSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn deltas(&self) -> Vec<i64> {
        self.items.iter().map(ItemScore::delta).collect()
    }

    pub fn rhos(&self) -> Vec<Rho> {
        self.items.iter().map(ItemScore::rho).collect()
    }

    pub fn information(&self) -> Vec<u32> {
        self.items.iter().map(ItemScore::information).collect()
    }
}

pub fn compute_scores(m: &OrderMatrix) -> ScoreSet {
    ScoreSet {
        items: (0..m.len())
            .map(|x| ItemScore {
                descendants: m.descendants(x) as u32,
                ancestors: m.ancestors(x) as u32,
            })
            .collect(),
    }
}

/// Items sorted by ascending score; equal scores keep their original order.
pub fn score_and_sort<K: Ord>(scores: &[K]) -> Estimate {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[a].cmp(&scores[b]));
    Estimate(order)
}

/// Arrangement given by the `Δ = d - a` score.
pub fn delta_estimate(m: &OrderMatrix) -> Estimate {
    score_and_sort(&compute_scores(m).deltas())
}

/// Arrangement given by the `ρ = d / (d + a)` score.
pub fn rho_estimate(m: &OrderMatrix) -> Estimate {
    score_and_sort(&compute_scores(m).rhos())
}
