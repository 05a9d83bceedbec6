use std::fmt;
use std::time::{SystemTime, UNIX_EPOCH};

use anysort_core::{make_sorter, Algorithm, ComparisonRecord, PendingPair, Sorter, Step};
use serde::{Deserialize, Serialize};

use crate::error::ApiError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SessionStatus {
    Active,
    Interrupted,
    Completed,
}

impl fmt::Display for SessionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SessionStatus::Active => "active",
            SessionStatus::Interrupted => "interrupted",
            SessionStatus::Completed => "completed",
        })
    }
}

/// One sorting run driven by a person. Items are identified by their index,
/// so labels may repeat.
#[derive(Debug)]
pub struct Session {
    pub id: String,
    pub labels: Vec<String>,
    pub algorithm: Algorithm,
    pub status: SessionStatus,
    pub created: SystemTime,
    pub updated: SystemTime,
    /// Last request that looked at the session; drives idle expiry.
    pub touched: SystemTime,
    sorter: Sorter,
}

/// On-disk form of a session. The sorter is rebuilt by replaying `history`.
#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct Snapshot {
    pub id: String,
    pub labels: Vec<String>,
    pub algorithm: Algorithm,
    pub status: SessionStatus,
    pub created_ms: u64,
    pub updated_ms: u64,
    pub history: Vec<ComparisonRecord>,
}

fn millis(t: SystemTime) -> u64 {
    t.duration_since(UNIX_EPOCH).map_or(0, |d| d.as_millis() as u64)
}

fn from_millis(ms: u64) -> SystemTime {
    UNIX_EPOCH + std::time::Duration::from_millis(ms)
}

impl Session {
    pub fn new(id: String, labels: Vec<String>, algorithm: Algorithm) -> Result<Self, ApiError> {
        let sorter = make_sorter(algorithm, labels.len()).map_err(|e| ApiError::Invalid(e.to_string()))?;
        let now = SystemTime::now();
        let mut s = Self {
            id,
            labels,
            algorithm,
            status: SessionStatus::Active,
            created: now,
            updated: now,
            touched: now,
            sorter,
        };
        s.hand_out_pair()?;
        Ok(s)
    }

    /// Moves the sorter to its next question, or marks the session completed.
    fn hand_out_pair(&mut self) -> Result<(), ApiError> {
        if self.sorter.pending().is_some() {
            return Ok(());
        }
        match self.sorter.next_pair().map_err(|e| ApiError::Internal(e.to_string()))? {
            Step::Compare(_) => {}
            Step::Done => self.status = SessionStatus::Completed,
        }
        Ok(())
    }

    pub fn pending(&self) -> Option<PendingPair> {
        match self.status {
            SessionStatus::Active => self.sorter.pending(),
            _ => None,
        }
    }

    pub fn history(&self) -> &[ComparisonRecord] {
        self.sorter.history()
    }

    pub fn comparisons_done(&self) -> usize {
        self.sorter.comparisons_done()
    }

    /// Item indices in estimated order.
    pub fn estimate(&self) -> Vec<usize> {
        self.sorter.rho_estimate().0
    }

    pub fn estimate_labels(&self) -> Vec<String> {
        self.sorter.rho_estimate().map(&self.labels)
    }

    fn ensure_active(&self) -> Result<(), ApiError> {
        match self.status {
            SessionStatus::Active => Ok(()),
            s => Err(ApiError::Gone(s.to_string())),
        }
    }

    /// Records that item `less` is the lesser of the pending pair `{i, j}`.
    pub fn answer(&mut self, i: usize, j: usize, less: usize) -> Result<(), ApiError> {
        self.ensure_active()?;
        let p = self
            .sorter
            .pending()
            .ok_or_else(|| ApiError::Internal("active session without a pending pair".into()))?;
        if !((p.i, p.j) == (i, j) || (p.i, p.j) == (j, i)) {
            return Err(ApiError::Conflict(format!(
                "pair ({i}, {j}) is not the pending pair ({}, {})",
                p.i, p.j
            )));
        }
        if less != i && less != j {
            return Err(ApiError::Invalid(format!("item {less} is not part of the pair ({i}, {j})")));
        }
        self.sorter
            .record_outcome(p, less)
            .map_err(|e| ApiError::Internal(e.to_string()))?;
        self.updated = SystemTime::now();
        self.hand_out_pair()
    }

    pub fn interrupt(&mut self) -> Result<(), ApiError> {
        self.ensure_active()?;
        self.status = SessionStatus::Interrupted;
        self.updated = SystemTime::now();
        Ok(())
    }

    pub(crate) fn snapshot(&self) -> Snapshot {
        Snapshot {
            id: self.id.clone(),
            labels: self.labels.clone(),
            algorithm: self.algorithm,
            status: self.status,
            created_ms: millis(self.created),
            updated_ms: millis(self.updated),
            history: self.history().to_vec(),
        }
    }

    /// Rebuilds a session by replaying its answers through a fresh sorter.
    pub(crate) fn restore(snap: Snapshot) -> Result<Self, ApiError> {
        let mut s = Self::new(snap.id, snap.labels, snap.algorithm)?;
        for rec in &snap.history {
            let (i, j) = rec.unordered();
            s.answer(i, j, rec.lo)
                .map_err(|e| ApiError::Internal(format!("snapshot {} does not replay: {e}", s.id)))?;
        }
        if snap.status == SessionStatus::Interrupted && s.status == SessionStatus::Active {
            s.status = SessionStatus::Interrupted;
        }
        s.created = from_millis(snap.created_ms);
        s.updated = from_millis(snap.updated_ms);
        s.touched = s.updated;
        Ok(s)
    }
}
