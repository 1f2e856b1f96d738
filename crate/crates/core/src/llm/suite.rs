use futures::stream::{self, StreamExt};
use serde::{Deserialize, Serialize};

use super::{ChatClient, LlmError, PromptKind, PromptSet};
use crate::dataset::{EditRecord, Scenario};

/// The three LLM editing regimes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EditScenario {
    Normal,
    Similar,
    Fast,
}

impl EditScenario {
    pub const ALL: [EditScenario; 3] = [EditScenario::Normal, EditScenario::Similar, EditScenario::Fast];

    pub fn prompt_kind(self) -> PromptKind {
        match self {
            EditScenario::Normal => PromptKind::Normal,
            EditScenario::Similar => PromptKind::Similar,
            EditScenario::Fast => PromptKind::Fast,
        }
    }

    pub fn scenario(self) -> Scenario {
        match self {
            EditScenario::Normal => Scenario::Normal,
            EditScenario::Similar => Scenario::Similar,
            EditScenario::Fast => Scenario::Fast,
        }
    }
}

impl std::str::FromStr for EditScenario {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "normal" => Ok(EditScenario::Normal),
            "similar" => Ok(EditScenario::Similar),
            "fast" => Ok(EditScenario::Fast),
            other => Err(crate::Error::InvalidInput(format!("unknown edit scenario `{other}`"))),
        }
    }
}

/// A question to be edited under one or more scenarios.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuestionJob {
    pub id: String,
    pub question: String,
    /// Generated with the initial prompt when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial_answer: Option<String>,
    pub knowledge: String,
}

/// One question under one scenario.
#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticJob {
    pub id: String,
    pub question: String,
    pub initial_answer: String,
    pub knowledge: String,
    pub scenario: EditScenario,
}

impl SyntheticJob {
    fn check(&self) -> Result<(), LlmError> {
        for (name, v) in [
            ("question", &self.question),
            ("initial_answer", &self.initial_answer),
            ("knowledge", &self.knowledge),
        ] {
            if v.is_empty() {
                return Err(LlmError::Job(format!("job `{}` has an empty {name}", self.id)));
            }
        }
        Ok(())
    }

    /// `{id}:{scenario}`, the record id of this job's output.
    pub fn record_id(&self) -> String {
        format!("{}:{}", self.id, self.scenario.scenario())
    }
}

/// Asks the model for an answer without the knowledge text.
pub async fn generate_initial_answer(
    question: &str,
    prompts: &PromptSet,
    client: &ChatClient,
) -> Result<String, LlmError> {
    let prompt = prompts
        .get(PromptKind::Initial)
        .render(question, None, None)
        .map_err(|e| LlmError::Job(e.to_string()))?;
    client.complete(&client.request(prompt)).await
}

/// Asks the model to revise the job's initial answer under its scenario.
pub async fn generate_edit(
    job: &SyntheticJob,
    prompts: &PromptSet,
    client: &ChatClient,
) -> Result<EditRecord, LlmError> {
    job.check()?;
    let prompt = prompts
        .get(job.scenario.prompt_kind())
        .render(&job.question, Some(&job.initial_answer), Some(&job.knowledge))
        .map_err(|e| LlmError::Job(e.to_string()))?;
    let edited = client.complete(&client.request(prompt)).await?;
    let mut record = EditRecord::new(job.record_id(), job.initial_answer.clone(), edited);
    record.context = Some(job.knowledge.clone());
    record.scenario = Some(job.scenario.scenario());
    Ok(record)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteFailure {
    pub job_id: String,
    /// `None` when the initial answer could not be generated.
    pub scenario: Option<EditScenario>,
    pub error: LlmError,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SuiteOutput {
    /// Successful edits, ordered by job then scenario.
    pub records: Vec<EditRecord>,
    pub failures: Vec<SuiteFailure>,
}

/// Runs every job under every scenario with up to `config.concurrency`
/// requests in flight. Output order follows the inputs, not completion order,
/// and a failed row never stops the rest.
pub async fn run_scenario_suite(
    jobs: &[QuestionJob],
    scenarios: &[EditScenario],
    prompts: &PromptSet,
    client: &ChatClient,
) -> Result<SuiteOutput, LlmError> {
    if jobs.is_empty() || scenarios.is_empty() {
        return Err(LlmError::Job("the suite needs at least one job and one scenario".into()));
    }
    let width = client.config().concurrency;

    // Fill in missing initial answers first.
    let initial: Vec<Result<String, LlmError>> = stream::iter(jobs)
        .map(|job| async move {
            match &job.initial_answer {
                Some(a) => Ok(a.clone()),
                None => generate_initial_answer(&job.question, prompts, client).await,
            }
        })
        .buffered(width)
        .collect()
        .await;

    let mut out = SuiteOutput::default();
    let mut expanded = Vec::new();
    for (job, answer) in jobs.iter().zip(initial) {
        match answer {
            Ok(answer) => expanded.extend(scenarios.iter().map(|&scenario| SyntheticJob {
                id: job.id.clone(),
                question: job.question.clone(),
                initial_answer: answer.clone(),
                knowledge: job.knowledge.clone(),
                scenario,
            })),
            Err(error) => out.failures.push(SuiteFailure {
                job_id: job.id.clone(),
                scenario: None,
                error,
            }),
        }
    }

    let results: Vec<(SyntheticJob, Result<EditRecord, LlmError>)> = stream::iter(expanded)
        .map(|job| async move {
            let r = generate_edit(&job, prompts, client).await;
            (job, r)
        })
        .buffered(width)
        .collect()
        .await;
    for (job, r) in results {
        match r {
            Ok(rec) => out.records.push(rec),
            Err(error) => out.failures.push(SuiteFailure {
                job_id: job.id,
                scenario: Some(job.scenario),
                error,
            }),
        }
    }
    Ok(out)
}
