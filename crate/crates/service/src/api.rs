use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::routing::{get, post};
use axum::{Json, Router};
use anysort_core::{Algorithm, ComparisonRecord};
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, CorsLayer};

use crate::error::ApiError;
use crate::session::{Session, SessionStatus};
use crate::store::SessionStore;
use crate::ServiceConfig;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CreateRequest {
    pub labels: Vec<String>,
    #[serde(default)]
    pub algorithm: Option<String>,
}

/// `less` is the index of the lesser item of the pair `(i, j)`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct AnswerRequest {
    pub i: usize,
    pub j: usize,
    pub less: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairView {
    pub i: usize,
    pub j: usize,
    pub labels: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    pub algorithm: Algorithm,
    pub labels: Vec<String>,
    pub status: SessionStatus,
    pub comparisons_done: usize,
    pub pending: Option<PairView>,
    /// Labels in estimated order.
    pub estimate: Vec<String>,
    /// Item indices in estimated order.
    pub estimate_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateView {
    pub status: SessionStatus,
    pub comparisons_done: usize,
    pub estimate: Vec<String>,
    pub estimate_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExportView {
    pub id: String,
    pub labels: Vec<String>,
    pub algorithm: Algorithm,
    pub status: SessionStatus,
    pub comparisons_done: usize,
    pub history: Vec<ComparisonRecord>,
    pub estimate: Vec<String>,
    pub estimate_indices: Vec<usize>,
}

impl SessionView {
    fn of(s: &Session) -> Self {
        Self {
            id: s.id.clone(),
            algorithm: s.algorithm,
            labels: s.labels.clone(),
            status: s.status,
            comparisons_done: s.comparisons_done(),
            pending: s.pending().map(|p| PairView {
                i: p.i,
                j: p.j,
                labels: [s.labels[p.i].clone(), s.labels[p.j].clone()],
            }),
            estimate: s.estimate_labels(),
            estimate_indices: s.estimate(),
        }
    }
}

impl EstimateView {
    fn of(s: &Session) -> Self {
        Self {
            status: s.status,
            comparisons_done: s.comparisons_done(),
            estimate: s.estimate_labels(),
            estimate_indices: s.estimate(),
        }
    }
}

impl ExportView {
    fn of(s: &Session) -> Self {
        Self {
            id: s.id.clone(),
            labels: s.labels.clone(),
            algorithm: s.algorithm,
            status: s.status,
            comparisons_done: s.comparisons_done(),
            history: s.history().to_vec(),
            estimate: s.estimate_labels(),
            estimate_indices: s.estimate(),
        }
    }
}

fn body<T>(payload: Result<Json<T>, JsonRejection>) -> Result<T, ApiError> {
    payload.map(|Json(v)| v).map_err(|e| ApiError::Invalid(e.body_text()))
}

async fn create(
    State(store): State<SessionStore>,
    payload: Result<Json<CreateRequest>, JsonRejection>,
) -> Result<(StatusCode, Json<SessionView>), ApiError> {
    let req = body(payload)?;
    let algorithm = match req.algorithm.as_deref() {
        None => Algorithm::Corsort,
        Some(id) => id.parse().map_err(|e: anysort_core::CoreError| ApiError::Invalid(e.to_string()))?,
    };
    let handle = store.create(req.labels, algorithm).await?;
    let s = handle.lock().await;
    tracing::info!(id = %s.id, n = s.labels.len(), %algorithm, "session created");
    Ok((StatusCode::CREATED, Json(SessionView::of(&s))))
}

async fn show(State(store): State<SessionStore>, Path(id): Path<String>) -> Result<Json<SessionView>, ApiError> {
    let handle = store.get(&id).await?;
    let s = handle.lock().await;
    Ok(Json(SessionView::of(&s)))
}

async fn answer(
    State(store): State<SessionStore>,
    Path(id): Path<String>,
    payload: Result<Json<AnswerRequest>, JsonRejection>,
) -> Result<Json<SessionView>, ApiError> {
    let handle = store.get(&id).await?;
    let mut s = handle.lock().await;
    let req = body(payload)?;
    s.answer(req.i, req.j, req.less)?;
    store.persist(&s)?;
    Ok(Json(SessionView::of(&s)))
}

async fn interrupt(State(store): State<SessionStore>, Path(id): Path<String>) -> Result<Json<ExportView>, ApiError> {
    let handle = store.get(&id).await?;
    let mut s = handle.lock().await;
    s.interrupt()?;
    store.persist(&s)?;
    Ok(Json(ExportView::of(&s)))
}

async fn estimate(State(store): State<SessionStore>, Path(id): Path<String>) -> Result<Json<EstimateView>, ApiError> {
    let handle = store.get(&id).await?;
    let s = handle.lock().await;
    Ok(Json(EstimateView::of(&s)))
}

async fn export(State(store): State<SessionStore>, Path(id): Path<String>) -> Result<Json<ExportView>, ApiError> {
    let handle = store.get(&id).await?;
    let s = handle.lock().await;
    Ok(Json(ExportView::of(&s)))
}

fn cors(config: &ServiceConfig) -> CorsLayer {
    let origin = match config.allowed_origin.as_deref().map(HeaderValue::from_str) {
        Some(Ok(v)) => AllowOrigin::exact(v),
        Some(Err(_)) => {
            tracing::warn!("ignoring malformed CORS origin, allowing any");
            AllowOrigin::any()
        }
        None => AllowOrigin::any(),
    };
    CorsLayer::new()
        .allow_origin(origin)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers([header::CONTENT_TYPE])
}

pub fn router(store: SessionStore, config: &ServiceConfig) -> Router {
    Router::new()
        .route("/sessions", post(create))
        .route("/sessions/:id", get(show))
        .route("/sessions/:id/answer", post(answer))
        .route("/sessions/:id/interrupt", post(interrupt))
        .route("/sessions/:id/estimate", get(estimate))
        .route("/sessions/:id/export", get(export))
        .layer(cors(config))
        .with_state(store)
}
