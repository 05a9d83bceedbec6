//! Spearman's footrule between a tentative arrangement and the true order.

use crate::error::{CoreError, Result};
use crate::types::{Estimate, Permutation};

/// Sum over positions `i` (1-based) of `|rank(estimate[i]) - i|`.
pub fn footrule(estimate: &Estimate, truth: &Permutation) -> Result<u64> {
    if estimate.len() != truth.len() {
        return Err(CoreError::Argument(format!(
            "estimate has {} items but truth has {}",
            estimate.len(),
            truth.len()
        )));
    }
    Ok(footrule_unchecked(estimate.items(), truth.ranks()))
}

/// Footrule of `order` against `ranks`; sizes are assumed to match.
pub(crate) fn footrule_unchecked(order: &[usize], ranks: &[usize]) -> u64 {
    order
        .iter()
        .enumerate()
        .map(|(pos, &item)| ranks[item].abs_diff(pos + 1) as u64)
        .sum()
}

/// Largest footrule attainable on `n` items, `⌊n²/2⌋`.
pub fn max_footrule(n: usize) -> u64 {
    (n as u64 * n as u64) / 2
}

/// Footrule divided by its maximum, in `[0, 1]`.
pub fn normalized_footrule(estimate: &Estimate, truth: &Permutation) -> Result<f64> {
    let n = truth.len();
    if n < 2 {
        return Err(CoreError::Argument(
            "normalized footrule needs at least two items".into(),
        ));
    }
    Ok(footrule(estimate, truth)? as f64 / max_footrule(n) as f64)
}
