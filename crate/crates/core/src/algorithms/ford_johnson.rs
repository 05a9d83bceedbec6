//! Merge-insertion (Ford-Johnson) as an explicit stack of recursion frames.
//!
//! Each frame pairs up its items, sorts the pair winners in a child frame,
//! then inserts the losers into the main chain by binary search, in batches
//! bounded by the Jacobsthal numbers 1, 3, 5, 11, 21, 43, ... Within a batch the
//! highest-numbered loser goes first, and each loser is searched only below
//! its partner.

use crate::order::OrderMatrix;

use super::Schedule;

#[derive(Debug)]
struct Search {
    item: usize,
    lo: usize,
    hi: usize,
}

#[derive(Debug)]
enum Phase {
    Pairing {
        next: usize,
        winners: Vec<usize>,
    },
    AwaitChild,
    Inserting {
        chain: Vec<usize>,
        /// Losers `b_2, b_3, ...` with their partner, `None` for the straggler.
        pend: Vec<(usize, Option<usize>)>,
        /// Indices into `pend`, in insertion order.
        order: Vec<usize>,
        cursor: usize,
        search: Option<Search>,
    },
}

#[derive(Debug)]
struct Frame {
    items: Vec<usize>,
    /// `partner[k]` is the loser paired with winner `winners[k]`.
    partner: Vec<(usize, usize)>,
    phase: Phase,
}

impl Frame {
    fn new(items: Vec<usize>) -> Self {
        Self {
            items,
            partner: Vec::new(),
            phase: Phase::Pairing {
                next: 0,
                winners: Vec::new(),
            },
        }
    }

    fn loser_of(&self, winner: usize) -> usize {
        self.partner
            .iter()
            .find(|&&(w, _)| w == winner)
            .map(|&(_, l)| l)
            .expect("every winner has a partner")
    }
}

/// Insertion order of `count` pending losers, numbered from 2 as in `b_2`.
fn jacobsthal_order(count: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(count);
    let last = count + 1;
    let (mut prev, mut t, mut k) = (1usize, 3usize, 2u32);
    while prev < last {
        let top = t.min(last);
        order.extend((prev + 1..=top).rev().map(|b| b - 2));
        prev = t;
        k += 1;
        t = if k % 2 == 0 {
            ((1usize << (k + 1)) + 1) / 3
        } else {
            ((1usize << (k + 1)) - 1) / 3
        };
    }
    order
}

#[derive(Debug)]
pub struct FordJohnson {
    stack: Vec<Frame>,
    /// Result handed back by the frame that just returned.
    returned: Option<Vec<usize>>,
}

impl FordJohnson {
    pub fn new(n: usize) -> Self {
        Self {
            stack: vec![Frame::new((0..n).collect())],
            returned: None,
        }
    }
}

impl Schedule for FordJohnson {
    fn poll(&mut self, _: &OrderMatrix) -> Option<(usize, usize)> {
        loop {
            let frame = self.stack.last_mut()?;
            match &mut frame.phase {
                Phase::Pairing { next, winners } => {
                    if frame.items.len() < 2 {
                        let done = std::mem::take(&mut frame.items);
                        self.stack.pop();
                        self.returned = Some(done);
                        continue;
                    }
                    if *next + 1 < frame.items.len() {
                        return Some((frame.items[*next], frame.items[*next + 1]));
                    }
                    let winners = std::mem::take(winners);
                    frame.phase = Phase::AwaitChild;
                    self.stack.push(Frame::new(winners));
                }
                Phase::AwaitChild => {
                    let sorted = self.returned.take().expect("child frame returned nothing");
                    let mut chain = Vec::with_capacity(frame.items.len());
                    chain.push(frame.loser_of(sorted[0]));
                    chain.extend_from_slice(&sorted);
                    let mut pend: Vec<(usize, Option<usize>)> = sorted[1..]
                        .iter()
                        .map(|&w| (frame.loser_of(w), Some(w)))
                        .collect();
                    if frame.items.len() % 2 == 1 {
                        pend.push((*frame.items.last().unwrap(), None));
                    }
                    let order = jacobsthal_order(pend.len());
                    frame.phase = Phase::Inserting {
                        chain,
                        pend,
                        order,
                        cursor: 0,
                        search: None,
                    };
                }
                Phase::Inserting {
                    chain,
                    pend,
                    order,
                    cursor,
                    search,
                } => {
                    if let Some(s) = search {
                        if s.lo < s.hi {
                            return Some((s.item, chain[(s.lo + s.hi) / 2]));
                        }
                        chain.insert(s.lo, s.item);
                        *search = None;
                        *cursor += 1;
                    }
                    if *cursor == order.len() {
                        let done = std::mem::take(chain);
                        self.stack.pop();
                        self.returned = Some(done);
                        continue;
                    }
                    let (item, partner) = pend[order[*cursor]];
                    let hi = match partner {
                        Some(w) => chain.iter().position(|&c| c == w).expect("partner in chain"),
                        None => chain.len(),
                    };
                    *search = Some(Search { item, lo: 0, hi });
                }
            }
        }
    }

    fn feed(&mut self, i_less: bool) {
        let frame = self.stack.last_mut().expect("no frame in progress");
        match &mut frame.phase {
            Phase::Pairing { next, winners } => {
                let (a, b) = (frame.items[*next], frame.items[*next + 1]);
                let (lo, hi) = if i_less { (a, b) } else { (b, a) };
                winners.push(hi);
                frame.partner.push((hi, lo));
                *next += 2;
            }
            Phase::Inserting { search: Some(s), .. } => {
                let mid = (s.lo + s.hi) / 2;
                if i_less {
                    s.hi = mid;
                } else {
                    s.lo = mid + 1;
                }
            }
            _ => unreachable!("no comparison was asked"),
        }
    }

    fn native(&self) -> Option<Vec<usize>> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insertion_batches() {
        // b2..b3 is the first batch, then b5 b4, then b11..b6
        assert_eq!(jacobsthal_order(0), Vec::<usize>::new());
        assert_eq!(jacobsthal_order(1), vec![0]);
        assert_eq!(jacobsthal_order(2), vec![1, 0]);
        assert_eq!(jacobsthal_order(4), vec![1, 0, 3, 2]);
        assert_eq!(jacobsthal_order(5), vec![1, 0, 3, 2, 4]);
        let order: Vec<usize> = jacobsthal_order(10).iter().map(|i| i + 2).collect();
        assert_eq!(order, vec![3, 2, 5, 4, 11, 10, 9, 8, 7, 6]);
    }
}
