use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::SystemTime;

use anysort_core::Algorithm;
use tokio::sync::{Mutex, RwLock};

use crate::error::ApiError;
use crate::session::{Session, Snapshot};
use crate::ServiceConfig;

/// In-memory session table. Each session has its own lock, so requests on
/// one session are serialized while different sessions proceed in parallel.
#[derive(Debug, Clone)]
pub struct SessionStore {
    inner: Arc<Inner>,
}

#[derive(Debug)]
struct Inner {
    config: ServiceConfig,
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
}

fn new_id() -> String {
    format!("{:032x}", rand::random::<u128>())
}

impl SessionStore {
    /// Empty store, reloading any snapshots found in the configured directory.
    pub fn open(config: ServiceConfig) -> io::Result<Self> {
        let mut sessions = HashMap::new();
        if let Some(dir) = &config.snapshot_dir {
            fs::create_dir_all(dir)?;
            for entry in fs::read_dir(dir)? {
                let path = entry?.path();
                if path.extension().is_none_or(|e| e != "json") {
                    continue;
                }
                let restored = fs::read_to_string(&path)
                    .map_err(|e| e.to_string())
                    .and_then(|text| serde_json::from_str::<Snapshot>(&text).map_err(|e| e.to_string()))
                    .and_then(|snap| Session::restore(snap).map_err(|e| e.to_string()));
                match restored {
                    Ok(s) => {
                        sessions.insert(s.id.clone(), Arc::new(Mutex::new(s)));
                    }
                    Err(e) => tracing::warn!("skipping snapshot {}: {e}", path.display()),
                }
            }
        }
        Ok(Self {
            inner: Arc::new(Inner { config, sessions: RwLock::new(sessions) }),
        })
    }

    pub fn config(&self) -> &ServiceConfig {
        &self.inner.config
    }

    pub async fn len(&self) -> usize {
        self.inner.sessions.read().await.len()
    }

    pub async fn is_empty(&self) -> bool {
        self.len().await == 0
    }

    pub async fn create(&self, labels: Vec<String>, algorithm: Algorithm) -> Result<Arc<Mutex<Session>>, ApiError> {
        let max = self.inner.config.max_items;
        if labels.is_empty() || labels.len() > max {
            return Err(ApiError::Invalid(format!(
                "between 1 and {max} items are accepted, got {}",
                labels.len()
            )));
        }
        let session = Session::new(new_id(), labels, algorithm)?;
        self.persist(&session)?;
        let id = session.id.clone();
        let handle = Arc::new(Mutex::new(session));
        self.inner.sessions.write().await.insert(id, handle.clone());
        Ok(handle)
    }

    /// Looks a session up and marks it as used. Expired sessions are dropped.
    pub async fn get(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        let handle = self
            .inner
            .sessions
            .read()
            .await
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::NotFound(id.to_string()))?;
        let now = SystemTime::now();
        let expired = {
            let mut s = handle.lock().await;
            let expired = self.is_expired(&s, now);
            if !expired {
                s.touched = now;
            }
            expired
        };
        if expired {
            self.remove(id).await;
            return Err(ApiError::NotFound(id.to_string()));
        }
        Ok(handle)
    }

    fn is_expired(&self, s: &Session, now: SystemTime) -> bool {
        now.duration_since(s.touched).is_ok_and(|idle| idle > self.inner.config.idle_ttl)
    }

    async fn remove(&self, id: &str) {
        self.inner.sessions.write().await.remove(id);
        if let Some(path) = self.snapshot_path(id) {
            let _ = fs::remove_file(path);
        }
    }

    /// Drops every session idle for longer than the TTL at time `now`.
    pub async fn purge_expired(&self, now: SystemTime) -> usize {
        let handles: Vec<(String, Arc<Mutex<Session>>)> = self
            .inner
            .sessions
            .read()
            .await
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let mut dropped = 0;
        for (id, h) in handles {
            if self.is_expired(&*h.lock().await, now) {
                self.remove(&id).await;
                dropped += 1;
            }
        }
        dropped
    }

    fn snapshot_path(&self, id: &str) -> Option<PathBuf> {
        self.inner.config.snapshot_dir.as_ref().map(|d| d.join(format!("{id}.json")))
    }

    /// Writes the session snapshot, if snapshots are enabled.
    pub fn persist(&self, session: &Session) -> Result<(), ApiError> {
        let Some(path) = self.snapshot_path(&session.id) else {
            return Ok(());
        };
        let text = serde_json::to_string(&session.snapshot()).map_err(|e| ApiError::Internal(e.to_string()))?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, text)
            .and_then(|_| fs::rename(&tmp, &path))
            .map_err(|e| ApiError::Internal(format!("writing {}: {e}", path.display())))
    }
}
