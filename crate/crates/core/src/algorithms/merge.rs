//! Mergesort over the ceil/floor split tree, with three schedules for the
//! same set of merges: recursive order, level by level, and level by level
//! with all merges of a level advanced in round-robin ("multizip").

use crate::order::OrderMatrix;

use super::Schedule;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    TopDown,
    BottomUp,
    Multizip,
}

/// A run being merged in place.
///
/// The segment `arr[start..end]` always reads as
/// `merged ++ left remainder ++ right remainder`.
#[derive(Debug, Clone)]
struct Merge {
    /// First position not yet emitted.
    out: usize,
    /// Start of the right remainder.
    right: usize,
    end: usize,
}

impl Merge {
    fn new(start: usize, len: usize) -> Self {
        Self {
            out: start,
            right: start + len.div_ceil(2),
            end: start + len,
        }
    }

    fn finished(&self) -> bool {
        self.out == self.right || self.right == self.end
    }

    fn pair(&self, arr: &[usize]) -> (usize, usize) {
        (arr[self.out], arr[self.right])
    }

    fn take(&mut self, arr: &mut [usize], left_less: bool) {
        if !left_less {
            arr[self.out..=self.right].rotate_right(1);
            self.right += 1;
        }
        self.out += 1;
    }
}

#[derive(Debug)]
pub struct MergeSchedule {
    arr: Vec<usize>,
    /// Groups of merges; each group is run to completion before the next.
    /// A group holds one merge except for multizip levels.
    groups: Vec<Vec<(usize, usize)>>,
    group: usize,
    active: Vec<Merge>,
    cursor: usize,
}

/// Nodes of the split tree with at least two items, grouped by depth.
fn levels(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut levels = Vec::new();
    let mut current = vec![(0usize, n)];
    while current.iter().any(|&(_, len)| len > 1) {
        levels.push(current.iter().copied().filter(|&(_, len)| len > 1).collect::<Vec<_>>());
        current = current
            .iter()
            .flat_map(|&(s, len)| {
                let m = len.div_ceil(2);
                [(s, m), (s + m, len - m)]
            })
            .collect();
    }
    levels
}

fn post_order(start: usize, len: usize, out: &mut Vec<(usize, usize)>) {
    if len < 2 {
        return;
    }
    let m = len.div_ceil(2);
    post_order(start, m, out);
    post_order(start + m, len - m, out);
    out.push((start, len));
}

impl MergeSchedule {
    pub fn new(n: usize, variant: Variant) -> Self {
        let groups = match variant {
            Variant::TopDown => {
                let mut order = Vec::new();
                post_order(0, n, &mut order);
                order.into_iter().map(|node| vec![node]).collect()
            }
            Variant::BottomUp => levels(n).into_iter().rev().flatten().map(|node| vec![node]).collect(),
            Variant::Multizip => levels(n).into_iter().rev().collect(),
        };
        Self {
            arr: (0..n).collect(),
            groups,
            group: 0,
            active: Vec::new(),
            cursor: 0,
        }
    }
}

impl Schedule for MergeSchedule {
    fn poll(&mut self, _: &OrderMatrix) -> Option<(usize, usize)> {
        loop {
            if self.active.is_empty() {
                let nodes = self.groups.get(self.group)?;
                self.active = nodes.iter().map(|&(s, len)| Merge::new(s, len)).collect();
                self.group += 1;
                self.cursor = 0;
            }
            // round-robin over the unfinished merges of the group
            if let Some(off) = (0..self.active.len())
                .map(|k| (self.cursor + k) % self.active.len())
                .find(|&k| !self.active[k].finished())
            {
                self.cursor = off;
                return Some(self.active[off].pair(&self.arr));
            }
            self.active.clear();
        }
    }

    fn feed(&mut self, i_less: bool) {
        let m = &mut self.active[self.cursor];
        m.take(&mut self.arr, i_less);
        self.cursor += 1;
        if self.cursor == self.active.len() {
            self.cursor = 0;
        }
    }

    fn native(&self) -> Option<Vec<usize>> {
        Some(self.arr.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_tree_levels() {
        assert_eq!(levels(1), Vec::<Vec<(usize, usize)>>::new());
        assert_eq!(levels(2), vec![vec![(0, 2)]]);
        assert_eq!(levels(5), vec![vec![(0, 5)], vec![(0, 3), (3, 2)], vec![(0, 2)]]);
    }
}
