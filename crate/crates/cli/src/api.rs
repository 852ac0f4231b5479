//! Stateless JSON endpoints. Every response is a pure function of the query
//! string; the only shared state is the family cache.

use std::collections::HashMap;
use std::sync::Arc;

use axum::extract::{Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Json, Router};
use serde::Serialize;

use poncelet_core::catalog::catalog_rows;
use poncelet_core::derived::AnchorSpec;
use poncelet_core::orbit::{BilliardConfig, FamilyCache, OrbitError, OrbitFamily};
use poncelet_core::sweep::{
    run_catalog_with, ConfigSpec, RunOptions, SweepPlan, DEFAULT_T_SAMPLES,
};

use crate::layers::parse_layers;
use crate::payload::{orbit_payload, FamilyPayload, OrbitPayloadError};

pub const PORT_ENV: &str = "PONCELET_PORT";
pub const DEFAULT_PORT: u16 = 8080;
pub const MAX_N: usize = 64;
pub const MAX_SAMPLES: usize = 4096;

/// The default anchors for `verify` and `/api/invariants`.
pub fn default_anchors() -> Vec<AnchorSpec> {
    vec![AnchorSpec::CENTER, AnchorSpec::F1, AnchorSpec::F2]
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub error: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub reason: String,
}

#[derive(Debug)]
pub enum ApiError {
    BadRequest {
        field: Option<String>,
        reason: String,
    },
    Solver(String),
}

impl ApiError {
    fn field(field: &str, reason: impl Into<String>) -> Self {
        ApiError::BadRequest {
            field: Some(field.into()),
            reason: reason.into(),
        }
    }
}

impl From<OrbitError> for ApiError {
    fn from(e: OrbitError) -> Self {
        match e {
            OrbitError::InvalidConfig(r) => ApiError::BadRequest {
                field: None,
                reason: r,
            },
            other => ApiError::Solver(other.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let (status, body) = match self {
            ApiError::BadRequest { field, reason } => (
                StatusCode::BAD_REQUEST,
                ErrorBody {
                    error: "bad_request",
                    field,
                    reason,
                },
            ),
            ApiError::Solver(reason) => (
                StatusCode::UNPROCESSABLE_ENTITY,
                ErrorBody {
                    error: "solver_failure",
                    field: None,
                    reason,
                },
            ),
        };
        (status, Json(body)).into_response()
    }
}

type Params = Query<HashMap<String, String>>;

fn required<T: std::str::FromStr>(q: &HashMap<String, String>, key: &str) -> Result<T, ApiError> {
    let raw = q.get(key).ok_or_else(|| ApiError::field(key, "missing"))?;
    raw.trim()
        .parse()
        .map_err(|_| ApiError::field(key, format!("cannot parse {raw:?}")))
}

fn optional<T: std::str::FromStr>(
    q: &HashMap<String, String>,
    key: &str,
) -> Result<Option<T>, ApiError> {
    match q.get(key) {
        None => Ok(None),
        Some(_) => required(q, key).map(Some),
    }
}

fn finite(v: f64, key: &str) -> Result<f64, ApiError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(ApiError::field(key, "must be finite"))
    }
}

fn config(q: &HashMap<String, String>) -> Result<BilliardConfig<f64>, ApiError> {
    let a = finite(required(q, "a")?, "a")?;
    let b = finite(required(q, "b")?, "b")?;
    let n: usize = required(q, "n")?;
    if n > MAX_N {
        return Err(ApiError::field("n", format!("at most {MAX_N}")));
    }
    Ok(BilliardConfig::new(a, b, n)?)
}

#[derive(Debug, Default)]
pub struct AppState {
    families: FamilyCache<f64>,
}

impl AppState {
    fn family(&self, q: &HashMap<String, String>) -> Result<Arc<OrbitFamily<f64>>, ApiError> {
        let c = config(q)?;
        Ok(self.families.get_or_build(&c)?)
    }
}

pub fn router() -> Router {
    Router::new()
        .route("/api/family", get(family))
        .route("/api/orbit", get(orbit))
        .route("/api/invariants", get(invariants))
        .route("/api/catalog", get(catalog))
        .with_state(Arc::new(AppState::default()))
}

fn cacheable<T: Serialize>(body: T) -> Response {
    (
        [(header::CACHE_CONTROL, "public, max-age=3600")],
        Json(body),
    )
        .into_response()
}

async fn family(State(st): State<Arc<AppState>>, Query(q): Params) -> Result<Response, ApiError> {
    let f = tokio::task::spawn_blocking(move || st.family(&q))
        .await
        .map_err(|e| ApiError::Solver(e.to_string()))??;
    Ok(cacheable(FamilyPayload::from(&*f)))
}

async fn orbit(State(st): State<Arc<AppState>>, Query(q): Params) -> Result<Response, ApiError> {
    let t = finite(required(&q, "t")?, "t")?;
    let layers = parse_layers(q.get("layers").map_or("", String::as_str))
        .map_err(|r| ApiError::field("layers", r))?;
    let payload = tokio::task::spawn_blocking(move || {
        let f = st.family(&q)?;
        orbit_payload(&f, t, &layers).map_err(|e| match e {
            OrbitPayloadError::Orbit(e) => ApiError::from(e),
            layer => ApiError::Solver(layer.to_string()),
        })
    })
    .await
    .map_err(|e| ApiError::Solver(e.to_string()))??;
    Ok(cacheable(payload))
}

async fn invariants(
    State(st): State<Arc<AppState>>,
    Query(q): Params,
) -> Result<Response, ApiError> {
    let samples = optional(&q, "samples")?.unwrap_or(DEFAULT_T_SAMPLES);
    if samples > MAX_SAMPLES {
        return Err(ApiError::field("samples", format!("at most {MAX_SAMPLES}")));
    }
    let anchors = match q.get("anchor") {
        None => default_anchors(),
        Some(raw) => vec![raw.parse().map_err(|r| ApiError::field("anchor", r))?],
    };
    let report = tokio::task::spawn_blocking(move || {
        let f = st.family(&q)?;
        let spec = ConfigSpec::new(f.billiard.a(), f.billiard.b(), f.n());
        let plan = SweepPlan::new(vec![spec])
            .with_samples(samples)
            .with_anchors(anchors);
        plan.validate()
            .map_err(|e| ApiError::field("samples", e.to_string()))?;
        let opts = RunOptions {
            keep_series: true,
            ..Default::default()
        };
        run_catalog_with(&plan, opts).map_err(|e| ApiError::Solver(e.to_string()))
    })
    .await
    .map_err(|e| ApiError::Solver(e.to_string()))??;
    if let Some(fail) = report.failures.first() {
        return Err(ApiError::Solver(fail.message.clone()));
    }
    Ok(cacheable(report))
}

async fn catalog() -> Response {
    cacheable(catalog_rows())
}

/// Port from `PONCELET_PORT`, else [`DEFAULT_PORT`].
pub fn default_port() -> Result<u16, String> {
    match std::env::var(PORT_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| format!("{PORT_ENV}={v:?} is not a port number")),
        Err(_) => Ok(DEFAULT_PORT),
    }
}

pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router()).await
}
