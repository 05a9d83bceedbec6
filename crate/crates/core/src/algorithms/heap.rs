use crate::order::OrderMatrix;

use super::Schedule;

#[derive(Debug, Clone, Copy)]
enum Sift {
    /// Compare the two children of `node`.
    Children,
    /// Compare `node` with its larger child.
    Parent { child: usize },
}

#[derive(Debug, Clone, Copy)]
enum Phase {
    /// Heap construction, sifting down `root` (1-based) then `root - 1`, ...
    Build { root: usize },
    /// Extraction, the heap occupies positions `1..=size`.
    Extract { size: usize },
    Done,
}

/// Heapsort with a 1-based max-heap built bottom-up.
#[derive(Debug)]
pub struct Heapsort {
    /// `heap[0]` is unused.
    heap: Vec<usize>,
    phase: Phase,
    sift: Option<(usize, Sift)>,
}

impl Heapsort {
    pub fn new(n: usize) -> Self {
        let mut heap = Vec::with_capacity(n + 1);
        heap.push(usize::MAX);
        heap.extend(0..n);
        let phase = if n < 2 {
            Phase::Done
        } else {
            Phase::Build { root: n / 2 }
        };
        let sift = match phase {
            Phase::Build { root } => Some((root, Sift::Children)),
            _ => None,
        };
        Self { heap, phase, sift }
    }

    fn size(&self) -> usize {
        match self.phase {
            Phase::Build { .. } => self.heap.len() - 1,
            Phase::Extract { size } => size,
            Phase::Done => 0,
        }
    }

    /// Starts the next sift once the current one is over.
    fn next_sift(&mut self) {
        match self.phase {
            Phase::Build { root } if root > 1 => {
                self.phase = Phase::Build { root: root - 1 };
                self.sift = Some((root - 1, Sift::Children));
            }
            Phase::Build { .. } => {
                let n = self.heap.len() - 1;
                self.heap.swap(1, n);
                self.begin_extract(n - 1);
            }
            Phase::Extract { size } => {
                self.heap.swap(1, size);
                self.begin_extract(size - 1);
            }
            Phase::Done => {}
        }
    }

    fn begin_extract(&mut self, size: usize) {
        if size < 2 {
            self.phase = Phase::Done;
            self.sift = None;
        } else {
            self.phase = Phase::Extract { size };
            self.sift = Some((1, Sift::Children));
        }
    }
}

impl Schedule for Heapsort {
    fn poll(&mut self, _: &OrderMatrix) -> Option<(usize, usize)> {
        loop {
            let (node, stage) = self.sift?;
            let size = self.size();
            let left = 2 * node;
            match stage {
                _ if left > size => self.next_sift(),
                Sift::Children if left + 1 > size => {
                    self.sift = Some((node, Sift::Parent { child: left }));
                }
                Sift::Children => return Some((self.heap[left], self.heap[left + 1])),
                Sift::Parent { child } => return Some((self.heap[node], self.heap[child])),
            }
        }
    }

    fn feed(&mut self, i_less: bool) {
        let (node, stage) = self.sift.expect("no sift in progress");
        match stage {
            Sift::Children => {
                let child = if i_less { 2 * node + 1 } else { 2 * node };
                self.sift = Some((node, Sift::Parent { child }));
            }
            Sift::Parent { child } => {
                if i_less {
                    self.heap.swap(node, child);
                    self.sift = Some((child, Sift::Children));
                } else {
                    self.next_sift();
                }
            }
        }
    }

    /// Heap region read backwards, then the sorted tail forwards.
    fn native(&self) -> Option<Vec<usize>> {
        let size = self.size();
        let mut out: Vec<usize> = self.heap[1..=size].iter().rev().copied().collect();
        out.extend_from_slice(&self.heap[size + 1..]);
        Some(out)
    }
}
