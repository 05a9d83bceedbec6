//! Dense relation matrix holding the transitive closure of the comparisons
//! observed so far.
//!
//! `entry(k, l) == +1` means `k ⪯ l`, `-1` means `k ≻ l` and `0` means the two
//! items are not comparable yet. The diagonal is `+1`. Descendant and ancestor
//! counts are kept alongside the matrix so that scores are available in `O(n)`.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::types::ComparisonRecord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderMatrix {
    n: usize,
    entries: Vec<i8>,
    /// `desc[x]`: items `y` with `y ⪯ x`, `x` included.
    desc: Vec<u32>,
    /// `anc[x]`: items `y` with `x ⪯ y`, `x` included.
    anc: Vec<u32>,
    relations: usize,
}

impl OrderMatrix {
    /// The empty partial order on `n` items.
    pub fn new(n: usize) -> Self {
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self {
            n,
            entries,
            desc: vec![1; n],
            anc: vec![1; n],
            relations: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn entry(&self, k: usize, l: usize) -> i8 {
        self.entries[k * self.n + l]
    }

    #[inline]
    pub fn row(&self, k: usize) -> &[i8] {
        &self.entries[k * self.n..(k + 1) * self.n]
    }

    /// Whether `k` and `l` are ordered either way.
    #[inline]
    pub fn comparable(&self, k: usize, l: usize) -> bool {
        self.entry(k, l) != 0
    }

    /// Number of known descendants of `x`, itself included.
    pub fn descendants(&self, x: usize) -> usize {
        self.desc[x] as usize
    }

    /// Number of known ancestors of `x`, itself included.
    pub fn ancestors(&self, x: usize) -> usize {
        self.anc[x] as usize
    }

    /// Number of ordered pairs `k ≺ l` with `k ≠ l`.
    pub fn relation_count(&self) -> usize {
        self.relations
    }

    /// Whether every pair of items is comparable.
    pub fn is_total(&self) -> bool {
        self.n < 2 || self.relations == self.n * (self.n - 1) / 2
    }

    /// Adds `lo ≺ hi` and restores transitivity.
    ///
    /// Every descendant of `lo` becomes a descendant of every ancestor of `hi`.
    /// Returns the number of newly related pairs.
    pub fn insert(&mut self, lo: usize, hi: usize) -> Result<usize> {
        let n = self.n;
        if lo >= n || hi >= n || lo == hi {
            return Err(CoreError::Argument(format!(
                "comparison {lo} < {hi} is invalid for {n} items"
            )));
        }
        match self.entry(lo, hi) {
            1 => return Ok(0),
            -1 => return Err(CoreError::Consistency { lo, hi }),
            _ => {}
        }
        // desc(lo) = {k : k ⪯ lo}, read from row lo through antisymmetry
        let below: Vec<usize> = self
            .row(lo)
            .iter()
            .enumerate()
            .filter(|&(k, &e)| e == -1 || k == lo)
            .map(|(k, _)| k)
            .collect();
        let above: Vec<usize> = self
            .row(hi)
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e == 1)
            .map(|(l, _)| l)
            .collect();
        let mut added = 0;
        for &k in &below {
            // k ⪯ hi already implies every ancestor of hi is above k
            if self.entries[k * n + hi] == 1 {
                continue;
            }
            for &l in &above {
                let idx = k * n + l;
                if self.entries[idx] == 0 {
                    self.entries[idx] = 1;
                    self.entries[l * n + k] = -1;
                    self.anc[k] += 1;
                    self.desc[l] += 1;
                    added += 1;
                }
            }
        }
        self.relations += added;
        Ok(added)
    }

    /// Inserts a recorded comparison outcome.
    pub fn insert_record(&mut self, rec: ComparisonRecord) -> Result<usize> {
        self.insert(rec.lo, rec.hi)
    }

    /// Closure of a whole comparison history.
    pub fn from_history(n: usize, history: &[ComparisonRecord]) -> Result<Self> {
        let mut m = Self::new(n);
        for &rec in history {
            m.insert_record(rec)?;
        }
        Ok(m)
    }

    /// Builds a matrix from raw `{-1, 0, 1}` entries, recomputing the counts.
    ///
    /// The entries must describe a transitively closed antisymmetric relation
    /// with `+1` on the diagonal.
    pub fn from_entries(n: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(CoreError::Argument("entry count must be n²".into()));
        }
        let mut m = Self {
            n,
            entries,
            desc: vec![0; n],
            anc: vec![0; n],
            relations: 0,
        };
        for k in 0..n {
            if m.entry(k, k) != 1 {
                return Err(CoreError::Argument(format!("diagonal entry {k} is not +1")));
            }
            for l in 0..n {
                let e = m.entry(k, l);
                if !(-1..=1).contains(&e) || (k != l && e != -m.entry(l, k)) {
                    return Err(CoreError::Argument(format!(
                        "entries ({k},{l}) break antisymmetry"
                    )));
                }
                if e == 1 {
                    m.anc[k] += 1;
                    m.desc[l] += 1;
                    if k != l {
                        m.relations += 1;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if m.entry(i, j) != 1 {
                    continue;
                }
                for k in 0..n {
                    if m.entry(j, k) == 1 && m.entry(i, k) != 1 {
                        return Err(CoreError::Argument("relation is not transitive".into()));
                    }
                }
            }
        }
        Ok(m)
    }

    /// The unique sorted order, when the relation is total.
    pub fn total_order(&self) -> Option<Vec<usize>> {
        if !self.is_total() {
            return None;
        }
        let mut order = vec![0; self.n];
        for x in 0..self.n {
            order[self.desc[x] as usize - 1] = x;
        }
        Some(order)
    }
}

/// Closure of `history` over `n` items, folding [`OrderMatrix::insert`].
pub fn closure_from_history(history: &[ComparisonRecord], n: usize) -> Result<OrderMatrix> {
    OrderMatrix::from_history(n, history)
}

/// Returns `m` extended with `rec` and re-closed.
pub fn closure_insert(mut m: OrderMatrix, rec: ComparisonRecord) -> Result<OrderMatrix> {
    m.insert_record(rec)?;
    Ok(m)
}
