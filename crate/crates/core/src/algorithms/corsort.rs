//! Corsort-Δρ: always compare the incomparable pair with the closest `Δ`
//! scores, preferring items about which little is known.

use crate::error::{CoreError, Result};
use crate::order::OrderMatrix;

use super::{PendingPair, Schedule};

/// Selection key: `(|Δ(i) - Δ(j)|, max(I(i), I(j)), i, j)` with `i < j`.
type Key = (u32, u32, usize, usize);

/// Next Corsort comparison for the order `m`.
///
/// Lexicographic minimum over incomparable pairs `i < j` of
/// `(|Δ(i) - Δ(j)|, max(I(i), I(j)))`, remaining ties going to the smallest
/// `(i, j)`. Items are scanned in `Δ` order so that the search stops as soon as
/// the `Δ` gap exceeds the best one found.
pub fn corsort_select(m: &OrderMatrix) -> Result<PendingPair> {
    let n = m.len();
    let delta: Vec<i32> = (0..n)
        .map(|x| m.descendants(x) as i32 - m.ancestors(x) as i32)
        .collect();
    let info: Vec<u32> = (0..n)
        .map(|x| (m.descendants(x) + m.ancestors(x)) as u32)
        .collect();
    let mut by_delta: Vec<usize> = (0..n).collect();
    by_delta.sort_unstable_by_key(|&x| (delta[x], info[x], x));

    let mut best: Option<Key> = None;
    for (pos, &x) in by_delta.iter().enumerate() {
        let row = m.row(x);
        for &y in &by_delta[pos + 1..] {
            let gap = (delta[y] - delta[x]) as u32;
            if let Some(b) = best {
                if gap > b.0 {
                    break;
                }
            }
            let key = (gap, info[x].max(info[y]), x.min(y), x.max(y));
            if best.is_some_and(|b| key >= b) || row[y] != 0 {
                continue;
            }
            best = Some(key);
        }
    }
    best.map(|(_, _, i, j)| PendingPair::new(i, j))
        .ok_or_else(|| CoreError::State("the order is already total".into()))
}

/// Reference scan of every pair, used to cross-check [`corsort_select`].
pub fn corsort_select_exhaustive(m: &OrderMatrix) -> Result<PendingPair> {
    let n = m.len();
    let mut best: Option<(i64, usize, usize, usize)> = None;
    for i in 0..n {
        for j in i + 1..n {
            if m.comparable(i, j) {
                continue;
            }
            let di = m.descendants(i) as i64 - m.ancestors(i) as i64;
            let dj = m.descendants(j) as i64 - m.ancestors(j) as i64;
            let ii = m.descendants(i) + m.ancestors(i);
            let ij = m.descendants(j) + m.ancestors(j);
            let key = ((di - dj).abs(), ii.max(ij), i, j);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
    }
    best.map(|(_, _, i, j)| PendingPair::new(i, j))
        .ok_or_else(|| CoreError::State("the order is already total".into()))
}

#[derive(Debug)]
pub struct Corsort;

impl Schedule for Corsort {
    fn poll(&mut self, order: &OrderMatrix) -> Option<(usize, usize)> {
        corsort_select(order).ok().map(|p| (p.i, p.j))
    }

    fn feed(&mut self, _: bool) {}

    fn native(&self) -> Option<Vec<usize>> {
        None
    }
}
