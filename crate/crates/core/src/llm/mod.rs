//! Optional generation of initial answers and scenario edits through a
//! chat-completion endpoint.
//!
//! Nothing here runs unless a [`ClientConfig`] is built explicitly or found
//! through [`ClientConfig::from_env`].

mod client;
mod prompt;
mod suite;

pub use client::{ChatClient, ClientConfig, CompletionRequest, ENV_API_BASE, ENV_API_KEY, ENV_MODEL};
pub use prompt::{
    render_prompt, PromptKind, PromptSet, ScenarioPrompt, ANSWER_SLOT, KNOWLEDGE_SLOT, QUESTION_SLOT,
};
pub use suite::{
    generate_edit, generate_initial_answer, run_scenario_suite, EditScenario, QuestionJob, SuiteFailure,
    SuiteOutput, SyntheticJob,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LlmError {
    #[error("transport error after {attempts} attempt(s): {message}")]
    Transport { attempts: u32, message: String },

    #[error("authentication failed (HTTP {status}) after {attempts} attempt(s): {body}")]
    Auth { status: u16, attempts: u32, body: String },

    #[error("HTTP {status} after {attempts} attempt(s): {body}")]
    Status { status: u16, attempts: u32, body: String },

    #[error("could not decode completion: {0}")]
    Decode(String),

    #[error("invalid client configuration: {0}")]
    Config(String),

    #[error("invalid job: {0}")]
    Job(String),
}

impl LlmError {
    fn is_retryable(&self) -> bool {
        matches!(
            self,
            LlmError::Transport { .. } | LlmError::Auth { .. } | LlmError::Status { .. }
        )
    }

    fn after_attempts(self, n: u32) -> Self {
        match self {
            LlmError::Transport { message, .. } => LlmError::Transport { attempts: n, message },
            LlmError::Auth { status, body, .. } => LlmError::Auth { status, attempts: n, body },
            LlmError::Status { status, body, .. } => LlmError::Status { status, attempts: n, body },
            other => other,
        }
    }
}
