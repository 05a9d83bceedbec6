//! HTTP service through which a person supplies the comparisons of an
//! anytime sort and may stop at any time.
//!
//! | method | path                        | effect                                  |
//! |--------|-----------------------------|-----------------------------------------|
//! | POST   | `/sessions`                 | create a session over labeled items     |
//! | GET    | `/sessions/:id`             | current state and pending pair          |
//! | POST   | `/sessions/:id/answer`      | record which item of the pair is lesser |
//! | POST   | `/sessions/:id/interrupt`   | stop and return the current estimate    |
//! | GET    | `/sessions/:id/estimate`    | current estimate, read only             |
//! | GET    | `/sessions/:id/export`      | labels, algorithm, history, estimate    |
//!
//! Estimates are always the `ρ` estimate of the comparisons made so far.

mod api;
mod error;
mod session;
mod store;

use std::net::SocketAddr;
use std::path::PathBuf;
use std::time::Duration;

pub use api::{router, AnswerRequest, CreateRequest, EstimateView, ExportView, PairView, SessionView};
pub use error::ApiError;
pub use session::{Session, SessionStatus};
pub use store::SessionStore;

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub max_items: usize,
    /// Sessions untouched for longer than this are dropped.
    pub idle_ttl: Duration,
    /// One JSON file per session, rewritten after every change.
    pub snapshot_dir: Option<PathBuf>,
    /// Origin allowed by CORS; `None` allows any origin.
    pub allowed_origin: Option<String>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            max_items: 500,
            idle_ttl: Duration::from_secs(24 * 3600),
            snapshot_dir: None,
            allowed_origin: None,
        }
    }
}

/// Binds `addr` and serves until the process is stopped.
pub async fn serve(addr: SocketAddr, config: ServiceConfig) -> std::io::Result<()> {
    let store = SessionStore::open(config.clone())?;
    let sweeper = store.clone();
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            sweeper.purge_expired(std::time::SystemTime::now()).await;
        }
    });
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(store, &config)).await
}
