//! Tab-separated dump of a run, one line per comparison:
//! `k  i  j  lo  S_native  S_rho`, the errors being measured after the
//! comparison (`NA` when the algorithm has no native estimate).

use std::fmt;

use crate::error::Result;
use crate::footrule::footrule;
use crate::types::Permutation;

use super::{Algorithm, Sorter, Step};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLine {
    /// 1-based comparison number.
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub lo: usize,
    pub native_error: Option<u64>,
    pub rho_error: u64,
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}\t{}\t", self.k, self.i, self.j, self.lo)?;
        match self.native_error {
            Some(s) => write!(f, "{s}")?,
            None => f.write_str("NA")?,
        }
        write!(f, "\t{}", self.rho_error)
    }
}

/// Runs `algorithm` on `truth` and records every step.
pub fn trace(algorithm: Algorithm, truth: &Permutation) -> Result<Vec<TraceLine>> {
    let mut s = Sorter::new(algorithm, truth.len())?;
    let mut lines = Vec::new();
    while let Step::Compare(p) = s.next_pair()? {
        let lo = if truth.less(p.i, p.j) { p.i } else { p.j };
        s.record_outcome(p, lo)?;
        lines.push(TraceLine {
            k: s.comparisons_done(),
            i: p.i,
            j: p.j,
            lo,
            native_error: s.native_estimate().map(|e| footrule(&e, truth)).transpose()?,
            rho_error: footrule(&s.rho_estimate(), truth)?,
        });
    }
    Ok(lines)
}
