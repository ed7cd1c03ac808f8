//! JSON-over-HTTP API.
//!
//! `POST /api/syllabify`, `/api/hyphenate` and `/api/count` take
//! `{"text": ..., "script": "auto", "lexicon": true}` and answer with the same
//! document the CLI prints for `--format json`. `GET /health` reports status.

use std::future::Future;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tokio::net::TcpListener;
use uzsyllable::{ExceptionLexicon, GraphemeInventory, ScriptChoice};

use crate::analyze;

/// Default bound on the request `text`, in bytes.
pub const DEFAULT_MAX_BODY: usize = 64 * 1024;

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub lexicon: Option<ExceptionLexicon>,
    pub max_body: usize,
    pub inventory: GraphemeInventory,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            lexicon: None,
            max_body: DEFAULT_MAX_BODY,
            inventory: GraphemeInventory::STANDARD,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct ApiRequest {
    pub text: String,
    #[serde(default)]
    pub script: ScriptChoice,
    #[serde(default = "default_true")]
    pub lexicon: bool,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Health {
    pub status: String,
    pub version: String,
    pub lexicon_entries: usize,
}

#[derive(Debug, Serialize)]
struct ApiError {
    error: String,
}

fn error(status: StatusCode, message: impl Into<String>) -> Response {
    (
        status,
        Json(ApiError {
            error: message.into(),
        }),
    )
        .into_response()
}

pub fn router(config: ServiceConfig) -> Router {
    let state = Arc::new(config);
    // the JSON envelope and escapes may exceed the text bound; the text
    // itself is checked in the handler
    let transport_limit = state.max_body.saturating_mul(6).saturating_add(4096);
    Router::new()
        .route("/api/syllabify", post(handle))
        .route("/api/hyphenate", post(handle))
        .route("/api/count", post(handle))
        .route("/health", get(health))
        .layer(DefaultBodyLimit::max(transport_limit))
        .with_state(state)
}

async fn handle(State(config): State<Arc<ServiceConfig>>, body: Bytes) -> Response {
    let request: ApiRequest = match serde_json::from_slice(&body) {
        Ok(r) => r,
        Err(e) => return error(StatusCode::BAD_REQUEST, format!("invalid request: {e}")),
    };
    if request.text.len() > config.max_body {
        return error(
            StatusCode::PAYLOAD_TOO_LARGE,
            format!(
                "text is {} bytes, limit is {}",
                request.text.len(),
                config.max_body
            ),
        );
    }
    let lexicon = config.lexicon.as_ref().filter(|_| request.lexicon);
    Json(analyze(
        &request.text,
        request.script,
        lexicon,
        config.inventory,
    ))
    .into_response()
}

async fn health(State(config): State<Arc<ServiceConfig>>) -> Json<Health> {
    Json(Health {
        status: "ok".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        lexicon_entries: config.lexicon.as_ref().map_or(0, ExceptionLexicon::len),
    })
}

/// Serves on `listener` until `shutdown` resolves; in-flight requests finish
/// first.
pub async fn serve(
    listener: TcpListener,
    config: ServiceConfig,
    shutdown: impl Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    axum::serve(listener, router(config))
        .with_graceful_shutdown(shutdown)
        .await
}

pub fn run_blocking(host: &str, port: u16, config: ServiceConfig) -> std::io::Result<()> {
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let addr: SocketAddr = format!("{host}:{port}")
            .parse()
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidInput, e))?;
        let listener = TcpListener::bind(addr).await?;
        log::info!("listening on http://{}", listener.local_addr()?);
        serve(listener, config, async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
    })
}
