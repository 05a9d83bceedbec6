use crate::order::OrderMatrix;

use super::Schedule;

/// Binary insertion sort, left to right.
///
/// The item being inserted stays at its input position until its slot in the
/// sorted prefix is found, so the list always reads
/// `sorted prefix ++ unprocessed suffix`.
#[derive(Debug)]
pub struct BinaryInsertion {
    arr: Vec<usize>,
    next: usize,
    lo: usize,
    hi: usize,
}

impl BinaryInsertion {
    pub fn new(n: usize) -> Self {
        Self {
            arr: (0..n).collect(),
            next: 1,
            lo: 0,
            hi: 1,
        }
    }
}

impl Schedule for BinaryInsertion {
    fn poll(&mut self, _: &OrderMatrix) -> Option<(usize, usize)> {
        loop {
            if self.next >= self.arr.len() {
                return None;
            }
            if self.lo < self.hi {
                let mid = (self.lo + self.hi) / 2;
                return Some((self.arr[self.next], self.arr[mid]));
            }
            self.arr[self.lo..=self.next].rotate_right(1);
            self.next += 1;
            self.lo = 0;
            self.hi = self.next;
        }
    }

    fn feed(&mut self, i_less: bool) {
        let mid = (self.lo + self.hi) / 2;
        if i_less {
            self.hi = mid;
        } else {
            self.lo = mid + 1;
        }
    }

    fn native(&self) -> Option<Vec<usize>> {
        Some(self.arr.clone())
    }
}
