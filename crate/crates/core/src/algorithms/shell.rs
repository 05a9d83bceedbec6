use crate::order::OrderMatrix;

use super::Schedule;

const CIURA: [usize; 8] = [1, 4, 10, 23, 57, 132, 301, 701];

/// Ciura's gaps below `n`, largest first; past 701 each gap is 2.25 times the
/// previous one, rounded down.
pub fn shell_gaps(n: usize) -> Vec<usize> {
    let mut gaps: Vec<usize> = CIURA.to_vec();
    while *gaps.last().unwrap() < n {
        let g = *gaps.last().unwrap();
        gaps.push(g * 9 / 4);
    }
    gaps.retain(|&g| g < n);
    gaps.reverse();
    gaps
}

/// Shellsort by gapped insertion; items move by swaps so the list is always a
/// permutation.
#[derive(Debug)]
pub struct Shellsort {
    arr: Vec<usize>,
    gaps: Vec<usize>,
    gap_idx: usize,
    /// Next position to insert for the current gap.
    next: usize,
    /// Current position of the item being inserted.
    pos: usize,
}

impl Shellsort {
    pub fn new(n: usize) -> Self {
        let gaps = shell_gaps(n);
        let first = gaps.first().copied().unwrap_or(n);
        Self {
            arr: (0..n).collect(),
            gaps,
            gap_idx: 0,
            next: first,
            pos: first,
        }
    }
}

impl Schedule for Shellsort {
    fn poll(&mut self, _: &OrderMatrix) -> Option<(usize, usize)> {
        loop {
            let gap = *self.gaps.get(self.gap_idx)?;
            if self.next >= self.arr.len() {
                self.gap_idx += 1;
                let g = *self.gaps.get(self.gap_idx)?;
                self.next = g;
                self.pos = g;
                continue;
            }
            if self.pos >= gap {
                return Some((self.arr[self.pos - gap], self.arr[self.pos]));
            }
            self.next += 1;
            self.pos = self.next;
        }
    }

    fn feed(&mut self, i_less: bool) {
        let gap = self.gaps[self.gap_idx];
        if i_less {
            // already in order: this insertion is over
            self.next += 1;
            self.pos = self.next;
        } else {
            self.arr.swap(self.pos - gap, self.pos);
            self.pos -= gap;
        }
    }

    fn native(&self) -> Option<Vec<usize>> {
        Some(self.arr.clone())
    }
}
