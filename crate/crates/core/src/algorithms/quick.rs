//! Quicksort and ASort with the first item of each block as pivot.
//!
//! Both partition the same blocks in the same way (stable, pivot moved one
//! slot to the right each time a smaller item is found), so they perform the
//! same comparisons. Quicksort recurses depth-first; ASort repeatedly looks for
//! the median position of each segment with quickselect and processes the
//! resulting segments breadth-first.

use std::collections::VecDeque;

use crate::order::OrderMatrix;

use super::Schedule;

/// Stable partition of `arr[start..end]` around `arr[start]`, one comparison
/// per step. The block reads `smaller ++ [pivot] ++ larger ++ unseen`.
#[derive(Debug, Clone)]
struct Partition {
    pivot_pos: usize,
    next: usize,
    end: usize,
}

impl Partition {
    fn new(start: usize, end: usize) -> Self {
        Self {
            pivot_pos: start,
            next: start + 1,
            end,
        }
    }

    fn finished(&self) -> bool {
        self.next == self.end
    }

    fn pair(&self, arr: &[usize]) -> (usize, usize) {
        (arr[self.pivot_pos], arr[self.next])
    }

    fn feed(&mut self, arr: &mut [usize], pivot_less: bool) {
        if !pivot_less {
            arr[self.pivot_pos..=self.next].rotate_right(1);
            self.pivot_pos += 1;
        }
        self.next += 1;
    }
}

#[derive(Debug)]
pub struct Quicksort {
    arr: Vec<usize>,
    stack: Vec<(usize, usize)>,
    current: Option<(usize, Partition)>,
}

impl Quicksort {
    pub fn new(n: usize) -> Self {
        Self {
            arr: (0..n).collect(),
            stack: if n > 1 { vec![(0, n)] } else { Vec::new() },
            current: None,
        }
    }
}

impl Schedule for Quicksort {
    fn poll(&mut self, _: &OrderMatrix) -> Option<(usize, usize)> {
        loop {
            if let Some((start, p)) = &self.current {
                if !p.finished() {
                    return Some(p.pair(&self.arr));
                }
                let (start, pivot, end) = (*start, p.pivot_pos, p.end);
                self.current = None;
                if end - pivot > 2 {
                    self.stack.push((pivot + 1, end));
                }
                if pivot - start > 1 {
                    self.stack.push((start, pivot));
                }
            }
            let (s, e) = self.stack.pop()?;
            self.current = Some((s, Partition::new(s, e)));
        }
    }

    fn feed(&mut self, i_less: bool) {
        let (_, p) = self.current.as_mut().expect("no partition in progress");
        p.feed(&mut self.arr, i_less);
    }

    fn native(&self) -> Option<Vec<usize>> {
        Some(self.arr.clone())
    }
}

#[derive(Debug)]
pub struct Asort {
    arr: Vec<usize>,
    placed: Vec<bool>,
    queue: VecDeque<(usize, usize)>,
    /// Segment whose median position is being searched.
    segment: Option<(usize, usize)>,
    partition: Option<Partition>,
}

impl Asort {
    pub fn new(n: usize) -> Self {
        Self {
            arr: (0..n).collect(),
            placed: vec![false; n],
            queue: if n > 1 { VecDeque::from([(0, n)]) } else { VecDeque::new() },
            segment: None,
            partition: None,
        }
    }
}

impl Schedule for Asort {
    fn poll(&mut self, _: &OrderMatrix) -> Option<(usize, usize)> {
        loop {
            if let Some(p) = &self.partition {
                if !p.finished() {
                    return Some(p.pair(&self.arr));
                }
                self.placed[p.pivot_pos] = true;
                self.partition = None;
            }
            let Some((s, e)) = self.segment else {
                self.segment = Some(self.queue.pop_front()?);
                continue;
            };
            let mid = s + (e - s - 1) / 2;
            if self.placed[mid] {
                self.segment = None;
                for (a, b) in [(s, mid), (mid + 1, e)] {
                    if b - a > 1 {
                        self.queue.push_back((a, b));
                    }
                }
                continue;
            }
            // block of unplaced positions around the target
            let mut a = mid;
            while a > s && !self.placed[a - 1] {
                a -= 1;
            }
            let mut b = mid + 1;
            while b < e && !self.placed[b] {
                b += 1;
            }
            self.partition = Some(Partition::new(a, b));
        }
    }

    fn feed(&mut self, i_less: bool) {
        let p = self.partition.as_mut().expect("no partition in progress");
        p.feed(&mut self.arr, i_less);
    }

    fn native(&self) -> Option<Vec<usize>> {
        Some(self.arr.clone())
    }
}
