//! Exact computations over all linear extensions of a partial order.
//!
//! Counting linear extensions is #P-complete, so every entry point takes an
//! [`EnumerationLimit`] and fails with [`CoreError::Resource`] once it is hit.

use crate::error::{CoreError, Result};
use crate::footrule::footrule_unchecked;
use crate::order::OrderMatrix;
use crate::types::Estimate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimit {
    pub max_items: usize,
    pub max_extensions: u64,
}

impl Default for EnumerationLimit {
    fn default() -> Self {
        Self {
            max_items: 20,
            max_extensions: 10_000_000,
        }
    }
}

/// Calls `visit` on every linear extension of `m`, in lexicographic order of
/// item indices. Returns the number of extensions.
pub fn for_each_linear_extension(
    m: &OrderMatrix,
    limit: EnumerationLimit,
    mut visit: impl FnMut(&[usize]),
) -> Result<u64> {
    let n = m.len();
    if n > limit.max_items {
        return Err(CoreError::Resource(format!(
            "{n} items exceeds the enumeration limit of {}",
            limit.max_items
        )));
    }
    // strict successors and count of unplaced strict predecessors
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| y != x && m.entry(x, y) == 1).collect())
        .collect();
    let mut waiting: Vec<usize> = (0..n).map(|x| m.descendants(x) - 1).collect();
    let mut placed = vec![false; n];
    let mut prefix = Vec::with_capacity(n);
    let mut count = 0u64;

    struct Walk<'a, F> {
        succ: &'a [Vec<usize>],
        waiting: &'a mut [usize],
        placed: &'a mut [bool],
        prefix: &'a mut Vec<usize>,
        count: &'a mut u64,
        limit: u64,
        visit: F,
    }

    impl<F: FnMut(&[usize])> Walk<'_, F> {
        fn run(&mut self) -> Result<()> {
            let n = self.placed.len();
            if self.prefix.len() == n {
                *self.count += 1;
                if *self.count > self.limit {
                    return Err(CoreError::Resource(format!(
                        "more than {} linear extensions",
                        self.limit
                    )));
                }
                (self.visit)(self.prefix);
                return Ok(());
            }
            for x in 0..n {
                if self.placed[x] || self.waiting[x] != 0 {
                    continue;
                }
                self.placed[x] = true;
                self.prefix.push(x);
                for &y in &self.succ[x] {
                    self.waiting[y] -= 1;
                }
                let r = self.run();
                for &y in &self.succ[x] {
                    self.waiting[y] += 1;
                }
                self.prefix.pop();
                self.placed[x] = false;
                r?;
            }
            Ok(())
        }
    }

    Walk {
        succ: &succ,
        waiting: &mut waiting,
        placed: &mut placed,
        prefix: &mut prefix,
        count: &mut count,
        limit: limit.max_extensions,
        visit: &mut visit,
    }
    .run()?;
    Ok(count)
}

pub fn enumerate_linear_extensions(m: &OrderMatrix, limit: EnumerationLimit) -> Result<Vec<Estimate>> {
    let mut out = Vec::new();
    for_each_linear_extension(m, limit, |e| out.push(Estimate(e.to_vec())))?;
    Ok(out)
}

pub fn count_linear_extensions(m: &OrderMatrix, limit: EnumerationLimit) -> Result<u64> {
    for_each_linear_extension(m, limit, |_| {})
}

/// `hist[x][p]`: number of extensions placing item `x` at position `p` (0-based).
fn position_histogram(m: &OrderMatrix, limit: EnumerationLimit) -> Result<(Vec<Vec<u64>>, u64)> {
    let n = m.len();
    let mut hist = vec![vec![0u64; n]; n];
    let total = for_each_linear_extension(m, limit, |e| {
        for (p, &x) in e.iter().enumerate() {
            hist[x][p] += 1;
        }
    })?;
    Ok((hist, total))
}

/// Lower median of each item's 1-based position over all linear extensions.
pub fn median_rank_scores(m: &OrderMatrix, limit: EnumerationLimit) -> Result<Vec<usize>> {
    let (hist, total) = position_histogram(m, limit)?;
    let target = total.div_ceil(2);
    Ok(hist
        .iter()
        .map(|h| {
            let mut acc = 0;
            h.iter()
                .position(|&c| {
                    acc += c;
                    acc >= target
                })
                .map_or(0, |p| p + 1)
        })
        .collect())
}

/// Whether `candidate` never places an item before one of its strict descendants.
pub fn is_linear_extension(m: &OrderMatrix, candidate: &Estimate) -> bool {
    let items = candidate.items();
    items.iter().enumerate().all(|(p, &x)| {
        items[p + 1..].iter().all(|&y| m.entry(y, x) != 1)
    })
}

/// Mean footrule of `candidate` against a uniformly random linear extension of `m`.
pub fn expected_footrule(m: &OrderMatrix, candidate: &Estimate, limit: EnumerationLimit) -> Result<f64> {
    candidate.validate(m.len())?;
    if !is_linear_extension(m, candidate) {
        return Err(CoreError::Argument(
            "candidate is not a linear extension of the order".into(),
        ));
    }
    let n = m.len();
    let mut ranks = vec![0usize; n];
    let mut sum = 0u128;
    let total = for_each_linear_extension(m, limit, |e| {
        for (p, &x) in e.iter().enumerate() {
            ranks[x] = p + 1;
        }
        sum += footrule_unchecked(candidate.items(), &ranks) as u128;
    })?;
    Ok(sum as f64 / total as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scores::score_and_sort;

    fn chain(n: usize) -> OrderMatrix {
        let mut m = OrderMatrix::new(n);
        for i in 1..n {
            m.insert(i - 1, i).unwrap();
        }
        m
    }

    #[test]
    fn empty_order_has_all_permutations() {
        let m = OrderMatrix::new(3);
        let exts = enumerate_linear_extensions(&m, EnumerationLimit::default()).unwrap();
        assert_eq!(exts.len(), 6);
        assert!(exts.iter().all(|e| is_linear_extension(&m, e)));
    }

    #[test]
    fn chain_has_one_extension() {
        let exts = enumerate_linear_extensions(&chain(4), EnumerationLimit::default()).unwrap();
        assert_eq!(exts, vec![Estimate(vec![0, 1, 2, 3])]);
    }

    #[test]
    fn chain_medians_are_positions() {
        let m = chain(5);
        assert_eq!(median_rank_scores(&m, EnumerationLimit::default()).unwrap(), vec![1, 2, 3, 4, 5]);
        let e = Estimate(vec![0, 1, 2, 3, 4]);
        assert_eq!(expected_footrule(&m, &e, EnumerationLimit::default()).unwrap(), 0.0);
    }

    #[test]
    fn antichain_of_two() {
        let m = OrderMatrix::new(2);
        let med = median_rank_scores(&m, EnumerationLimit::default()).unwrap();
        assert_eq!(med[0], med[1]);
        assert_eq!(score_and_sort(&med).0, vec![0, 1]);
        for e in [Estimate(vec![0, 1]), Estimate(vec![1, 0])] {
            assert_eq!(expected_footrule(&m, &e, EnumerationLimit::default()).unwrap(), 1.0);
        }
    }

    #[test]
    fn limits_are_enforced() {
        let big = OrderMatrix::new(21);
        assert!(matches!(
            count_linear_extensions(&big, EnumerationLimit::default()),
            Err(CoreError::Resource(_))
        ));
        let tight = EnumerationLimit { max_items: 20, max_extensions: 100 };
        assert!(matches!(
            count_linear_extensions(&OrderMatrix::new(6), tight),
            Err(CoreError::Resource(_))
        ));
        assert_eq!(count_linear_extensions(&OrderMatrix::new(4), tight).unwrap(), 24);
    }

    #[test]
    fn linear_extension_check() {
        let m = chain(3);
        assert!(!is_linear_extension(&m, &Estimate(vec![1, 0, 2])));
        assert!(is_linear_extension(&m, &Estimate(vec![0, 1, 2])));
        assert!(is_linear_extension(&OrderMatrix::new(3), &Estimate(vec![2, 0, 1])));
        assert!(expected_footrule(&m, &Estimate(vec![1, 0, 2]), EnumerationLimit::default()).is_err());
    }
}
