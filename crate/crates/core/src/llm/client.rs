//! Minimal chat-completion client.
//!
//! Request: `POST {api_base}/chat/completions` with
//! `{"model", "messages": [{"role": "user", "content": prompt}], "temperature", "max_tokens"?}`
//! and `Authorization: Bearer {api_key}` when a key is configured.
//! Response: the text at `choices[0].message.content`.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::LlmError;

pub const ENV_API_BASE: &str = "LZDIST_API_BASE";
pub const ENV_API_KEY: &str = "LZDIST_API_KEY";
pub const ENV_MODEL: &str = "LZDIST_MODEL";

const DEFAULT_MODEL: &str = "claude-3-sonnet-20240229";
const BODY_SNIPPET: usize = 512;

#[derive(Clone, Debug, PartialEq)]
pub struct ClientConfig {
    pub api_base: String,
    pub api_key: Option<String>,
    pub model: String,
    /// Retries after the first attempt.
    pub max_retries: u32,
    pub timeout_s: f64,
    pub temperature: f64,
    pub max_tokens: Option<u32>,
    /// First retry delay; doubles on every further retry up to `backoff_max`.
    pub backoff_base: Duration,
    pub backoff_max: Duration,
    /// Requests in flight at once during a suite run.
    pub concurrency: usize,
}

impl ClientConfig {
    pub fn new(api_base: impl Into<String>, model: impl Into<String>) -> Self {
        Self {
            api_base: api_base.into(),
            api_key: None,
            model: model.into(),
            max_retries: 3,
            timeout_s: 120.0,
            temperature: 0.0,
            max_tokens: None,
            backoff_base: Duration::from_millis(500),
            backoff_max: Duration::from_secs(30),
            concurrency: 4,
        }
    }

    /// Reads the endpoint from the environment. Returns `None` unless
    /// `LZDIST_API_BASE` is set, so nothing talks to the network by default.
    pub fn from_env() -> Option<Self> {
        let base = std::env::var(ENV_API_BASE).ok().filter(|s| !s.is_empty())?;
        let model = std::env::var(ENV_MODEL).unwrap_or_else(|_| DEFAULT_MODEL.to_owned());
        let mut cfg = Self::new(base, model);
        cfg.api_key = std::env::var(ENV_API_KEY).ok().filter(|s| !s.is_empty());
        Some(cfg)
    }

    pub fn validate(&self) -> Result<(), LlmError> {
        if !(self.timeout_s > 0.0 && self.timeout_s.is_finite()) {
            return Err(LlmError::Config(format!("timeout must be positive, got {}", self.timeout_s)));
        }
        if self.concurrency == 0 {
            return Err(LlmError::Config("concurrency must be at least 1".into()));
        }
        if self.api_base.is_empty() {
            return Err(LlmError::Config("api base URL is empty".into()));
        }
        Ok(())
    }

    fn backoff(&self, retry: u32) -> Duration {
        self.backoff_base
            .saturating_mul(2u32.saturating_pow(retry))
            .min(self.backoff_max)
    }
}

/// One completion call.
#[derive(Clone, Debug, PartialEq)]
pub struct CompletionRequest {
    pub model: String,
    pub prompt: String,
    pub max_retries: u32,
    pub timeout_s: f64,
}

#[derive(Serialize)]
struct ChatMessage<'a> {
    role: &'a str,
    content: &'a str,
}

#[derive(Serialize)]
struct ChatBody<'a> {
    model: &'a str,
    messages: [ChatMessage<'a>; 1],
    temperature: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_tokens: Option<u32>,
}

#[derive(Deserialize)]
struct ChatResponse {
    choices: Vec<Choice>,
}

#[derive(Deserialize)]
struct Choice {
    message: ResponseMessage,
}

#[derive(Deserialize)]
struct ResponseMessage {
    content: String,
}

#[derive(Clone, Debug)]
pub struct ChatClient {
    http: reqwest::Client,
    config: ClientConfig,
}

impl ChatClient {
    pub fn new(config: ClientConfig) -> Result<Self, LlmError> {
        config.validate()?;
        let http = reqwest::Client::builder()
            .build()
            .map_err(|e| LlmError::Config(e.to_string()))?;
        Ok(Self { http, config })
    }

    pub fn config(&self) -> &ClientConfig {
        &self.config
    }

    pub fn request(&self, prompt: impl Into<String>) -> CompletionRequest {
        CompletionRequest {
            model: self.config.model.clone(),
            prompt: prompt.into(),
            max_retries: self.config.max_retries,
            timeout_s: self.config.timeout_s,
        }
    }

    fn endpoint(&self) -> String {
        format!("{}/chat/completions", self.config.api_base.trim_end_matches('/'))
    }

    /// Sends `req`, retrying transport failures and non-2xx replies with
    /// exponential backoff until `req.max_retries` retries are used up.
    pub async fn complete(&self, req: &CompletionRequest) -> Result<String, LlmError> {
        let body = ChatBody {
            model: &req.model,
            messages: [ChatMessage {
                role: "user",
                content: &req.prompt,
            }],
            temperature: self.config.temperature,
            max_tokens: self.config.max_tokens,
        };
        let mut retry = 0;
        loop {
            match self.attempt(&body, req.timeout_s).await {
                Ok(text) => return Ok(text),
                Err(e) if e.is_retryable() && retry < req.max_retries => {
                    log::debug!("attempt {} failed: {e}; retrying", retry + 1);
                    tokio::time::sleep(self.config.backoff(retry)).await;
                    retry += 1;
                }
                Err(e) => return Err(e.after_attempts(retry + 1)),
            }
        }
    }

    async fn attempt(&self, body: &ChatBody<'_>, timeout_s: f64) -> Result<String, LlmError> {
        let mut builder = self
            .http
            .post(self.endpoint())
            .timeout(Duration::from_secs_f64(timeout_s))
            .json(body);
        if let Some(key) = &self.config.api_key {
            builder = builder.bearer_auth(key);
        }
        let resp = builder.send().await.map_err(|e| LlmError::Transport {
            attempts: 1,
            message: e.to_string(),
        })?;
        let status = resp.status();
        let text = resp.text().await.map_err(|e| LlmError::Transport {
            attempts: 1,
            message: e.to_string(),
        })?;
        if !status.is_success() {
            let body = snippet(&text);
            let status = status.as_u16();
            return Err(if status == 401 || status == 403 {
                LlmError::Auth {
                    status,
                    attempts: 1,
                    body,
                }
            } else {
                LlmError::Status {
                    status,
                    attempts: 1,
                    body,
                }
            });
        }
        let parsed: ChatResponse =
            serde_json::from_str(&text).map_err(|e| LlmError::Decode(format!("{e}: {}", snippet(&text))))?;
        parsed
            .choices
            .into_iter()
            .next()
            .map(|c| c.message.content)
            .ok_or_else(|| LlmError::Decode("response has no choices".into()))
    }
}

fn snippet(body: &str) -> String {
    match body.char_indices().nth(BODY_SNIPPET) {
        Some((cut, _)) => format!("{}…", &body[..cut]),
        None => body.to_owned(),
    }
}
