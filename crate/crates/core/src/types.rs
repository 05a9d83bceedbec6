//! Plain value types shared by every module: permutations of true ranks,
//! comparison outcomes and tentative arrangements.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// True ranks of the items, 1-based: `ranks()[i]` is the rank of item `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        if n == 0 {
            return Err(CoreError::Argument("permutation must be non-empty".into()));
        }
        let mut seen = vec![false; n];
        for &r in &ranks {
            if r == 0 || r > n || seen[r - 1] {
                return Err(CoreError::Argument(format!(
                    "ranks must be a bijection onto 1..={n}, got {ranks:?}"
                )));
            }
            seen[r - 1] = true;
        }
        Ok(Self(ranks))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self, item: usize) -> usize {
        self.0[item]
    }

    /// Whether item `a` is smaller than item `b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.0[a] < self.0[b]
    }

    /// Items listed in increasing true rank.
    pub fn sorted_order(&self) -> Estimate {
        let mut order = vec![0; self.len()];
        for (item, &r) in self.0.iter().enumerate() {
            order[r - 1] = item;
        }
        Estimate(order)
    }

    /// L1 distance between two rank vectors.
    pub fn distance(&self, other: &Permutation) -> Result<u64> {
        if self.len() != other.len() {
            return Err(CoreError::Argument(format!(
                "size mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.abs_diff(b) as u64)
            .sum())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = CoreError;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// Outcome of one comparison: item `lo` is strictly less than item `hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComparisonRecord {
    pub lo: usize,
    pub hi: usize,
}

impl ComparisonRecord {
    pub fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    /// The pair as an unordered key `(min, max)`.
    pub fn unordered(&self) -> (usize, usize) {
        (self.lo.min(self.hi), self.lo.max(self.hi))
    }
}

/// A tentative sorted arrangement, given as item indices from smallest to largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Estimate(pub Vec<usize>);

impl Estimate {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn items(&self) -> &[usize] {
        &self.0
    }

    /// Checks that the arrangement is a permutation of `0..n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(CoreError::Argument(format!(
                "estimate has {} items, expected {n}",
                self.0.len()
            )));
        }
        let mut seen = vec![false; n];
        for &i in &self.0 {
            if i >= n || seen[i] {
                return Err(CoreError::Argument(format!(
                    "estimate is not a permutation of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(())
    }

    /// Position of every item in the arrangement.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (p, &item) in self.0.iter().enumerate() {
            pos[item] = p;
        }
        pos
    }

    /// Maps item indices through `values`, e.g. to print the arranged values.
    pub fn map<T: Clone>(&self, values: &[T]) -> Vec<T> {
        self.0.iter().map(|&i| values[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_rejects_non_bijections() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![2, 1]).is_ok());
    }

    #[test]
    fn sorted_order_inverts_ranks() {
        let p = Permutation::new(vec![4, 2, 3, 1, 5]).unwrap();
        assert_eq!(p.sorted_order().0, vec![3, 1, 2, 0, 4]);
    }

    #[test]
    fn estimate_validation() {
        assert!(Estimate(vec![1, 0, 2]).validate(3).is_ok());
        assert!(Estimate(vec![1, 1, 2]).validate(3).is_err());
        assert!(Estimate(vec![1, 0]).validate(3).is_err());
    }
}
