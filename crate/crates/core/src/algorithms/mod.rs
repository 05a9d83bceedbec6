//! Interruptible sorting schedules.
//!
//! A [`Sorter`] asks for one comparison at a time: call [`Sorter::next_pair`],
//! obtain the answer from any oracle (a permutation, a human, ...) and hand it
//! back through [`Sorter::record_outcome`]. Between any two steps the sorter
//! can be interrupted and asked for an estimate of the sorted order.

mod corsort;
mod ford_johnson;
mod heap;
mod insertion;
mod merge;
mod quick;
mod shell;
pub mod trace;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::order::OrderMatrix;
use crate::scores::rho_estimate;
use crate::types::{ComparisonRecord, Estimate, Permutation};

pub use corsort::{corsort_select, corsort_select_exhaustive};
pub use shell::shell_gaps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    TopdownMerge,
    BottomupMerge,
    Multizip,
    Quicksort,
    Asort,
    BinaryInsertion,
    FordJohnson,
    Heapsort,
    Shellsort,
    Corsort,
}

impl Algorithm {
    pub const ALL: [Algorithm; 10] = [
        Algorithm::TopdownMerge,
        Algorithm::BottomupMerge,
        Algorithm::Multizip,
        Algorithm::Quicksort,
        Algorithm::Asort,
        Algorithm::BinaryInsertion,
        Algorithm::FordJohnson,
        Algorithm::Heapsort,
        Algorithm::Shellsort,
        Algorithm::Corsort,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::TopdownMerge => "topdown_merge",
            Algorithm::BottomupMerge => "bottomup_merge",
            Algorithm::Multizip => "multizip",
            Algorithm::Quicksort => "quicksort",
            Algorithm::Asort => "asort",
            Algorithm::BinaryInsertion => "binary_insertion",
            Algorithm::FordJohnson => "ford_johnson",
            Algorithm::Heapsort => "heapsort",
            Algorithm::Shellsort => "shellsort",
            Algorithm::Corsort => "corsort",
        }
    }

    /// Whether the algorithm maintains a list that can be read as an estimate.
    pub fn has_native_estimator(self) -> bool {
        !matches!(self, Algorithm::FordJohnson | Algorithm::Corsort)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| CoreError::UnknownAlgorithm(s.to_string()))
    }
}

/// The two items to compare next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PendingPair {
    pub i: usize,
    pub j: usize,
}

impl PendingPair {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert_ne!(i, j);
        Self { i, j }
    }

    pub fn contains(&self, item: usize) -> bool {
        self.i == item || self.j == item
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Compare(PendingPair),
    Done,
}

/// One algorithm's comparison schedule.
///
/// `poll` advances the internal state until the next comparison is known and
/// returns it, or `None` once sorted. It is called exactly once between two
/// `feed` calls.
trait Schedule: Send + fmt::Debug {
    fn poll(&mut self, order: &OrderMatrix) -> Option<(usize, usize)>;
    /// Answer to the last polled pair `(i, j)`: whether `i < j`.
    fn feed(&mut self, i_less: bool);
    fn native(&self) -> Option<Vec<usize>>;
}

fn schedule_for(algorithm: Algorithm, n: usize) -> Box<dyn Schedule> {
    match algorithm {
        Algorithm::TopdownMerge => Box::new(merge::MergeSchedule::new(n, merge::Variant::TopDown)),
        Algorithm::BottomupMerge => Box::new(merge::MergeSchedule::new(n, merge::Variant::BottomUp)),
        Algorithm::Multizip => Box::new(merge::MergeSchedule::new(n, merge::Variant::Multizip)),
        Algorithm::Quicksort => Box::new(quick::Quicksort::new(n)),
        Algorithm::Asort => Box::new(quick::Asort::new(n)),
        Algorithm::BinaryInsertion => Box::new(insertion::BinaryInsertion::new(n)),
        Algorithm::FordJohnson => Box::new(ford_johnson::FordJohnson::new(n)),
        Algorithm::Heapsort => Box::new(heap::Heapsort::new(n)),
        Algorithm::Shellsort => Box::new(shell::Shellsort::new(n)),
        Algorithm::Corsort => Box::new(corsort::Corsort),
    }
}

/// Stepwise state of one sorting run.
#[derive(Debug)]
pub struct Sorter {
    algorithm: Algorithm,
    n: usize,
    schedule: Box<dyn Schedule>,
    order: OrderMatrix,
    history: Vec<ComparisonRecord>,
    upcoming: Option<PendingPair>,
    awaiting: bool,
}

pub fn make_sorter(algorithm: Algorithm, n: usize) -> Result<Sorter> {
    Sorter::new(algorithm, n)
}

impl Sorter {
    pub fn new(algorithm: Algorithm, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(CoreError::Argument("cannot sort an empty list".into()));
        }
        let mut s = Self {
            algorithm,
            n,
            schedule: schedule_for(algorithm, n),
            order: OrderMatrix::new(n),
            history: Vec::new(),
            upcoming: None,
            awaiting: false,
        };
        s.advance();
        Ok(s)
    }

    fn advance(&mut self) {
        self.upcoming = self.schedule.poll(&self.order).map(|(i, j)| PendingPair::new(i, j));
        debug_assert!(self.upcoming.is_some() || self.order.is_total());
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_done(&self) -> bool {
        self.upcoming.is_none()
    }

    pub fn comparisons_done(&self) -> usize {
        self.history.len()
    }

    pub fn history(&self) -> &[ComparisonRecord] {
        &self.history
    }

    /// Closure of the history recorded so far.
    pub fn order(&self) -> &OrderMatrix {
        &self.order
    }

    /// The pair handed out by `next_pair` and not answered yet.
    pub fn pending(&self) -> Option<PendingPair> {
        self.awaiting.then_some(self.upcoming).flatten()
    }

    pub fn next_pair(&mut self) -> Result<Step> {
        if self.awaiting {
            return Err(CoreError::State(
                "the previous pair has not been answered".into(),
            ));
        }
        match self.upcoming {
            Some(p) => {
                self.awaiting = true;
                Ok(Step::Compare(p))
            }
            None => Ok(Step::Done),
        }
    }

    /// Records that `less` is the smaller item of the pending `pair`.
    pub fn record_outcome(&mut self, pair: PendingPair, less: usize) -> Result<()> {
        let pending = self
            .pending()
            .ok_or_else(|| CoreError::State("no comparison is pending".into()))?;
        if pair != pending {
            return Err(CoreError::State(format!(
                "pair ({}, {}) is not the pending pair ({}, {})",
                pair.i, pair.j, pending.i, pending.j
            )));
        }
        if !pair.contains(less) {
            return Err(CoreError::Argument(format!(
                "item {less} is not part of the pair ({}, {})",
                pair.i, pair.j
            )));
        }
        let hi = if less == pair.i { pair.j } else { pair.i };
        self.order.insert(less, hi)?;
        self.history.push(ComparisonRecord::new(less, hi));
        self.awaiting = false;
        self.schedule.feed(less == pair.i);
        self.advance();
        Ok(())
    }

    /// The arrangement the algorithm maintains, if it has one.
    pub fn native_estimate(&self) -> Option<Estimate> {
        self.schedule.native().map(Estimate)
    }

    /// Score-and-sort by `ρ` over the closure of the history.
    pub fn rho_estimate(&self) -> Estimate {
        rho_estimate(&self.order)
    }

    /// Answers every remaining comparison from `truth`.
    pub fn run_to_completion(&mut self, truth: &Permutation) -> Result<(usize, &[ComparisonRecord])> {
        if truth.len() != self.n {
            return Err(CoreError::Argument(format!(
                "truth has {} items, sorter has {}",
                truth.len(),
                self.n
            )));
        }
        if let Some(p) = self.pending() {
            self.record_outcome(p, if truth.less(p.i, p.j) { p.i } else { p.j })?;
        }
        while let Step::Compare(p) = self.next_pair()? {
            self.record_outcome(p, if truth.less(p.i, p.j) { p.i } else { p.j })?;
        }
        Ok((self.history.len(), &self.history))
    }
}

/// Comparison count and history of a complete run on `truth`.
pub fn run_to_completion(algorithm: Algorithm, truth: &Permutation) -> Result<(usize, Vec<ComparisonRecord>)> {
    let mut s = Sorter::new(algorithm, truth.len())?;
    s.run_to_completion(truth)?;
    Ok((s.history.len(), s.history))
}
