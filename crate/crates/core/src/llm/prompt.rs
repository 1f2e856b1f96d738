//! Prompt templates with `<QUESTION>`, `<LLM_ANSWER>` and `<KNOWLEDGE>` slots.
//!
//! The English templates ship in `prompts/en/`; a directory with the same four
//! file names (for example prompts in French) can replace them at
//! run time through [`PromptSet::from_dir`].

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub const QUESTION_SLOT: &str = "<QUESTION>";
pub const ANSWER_SLOT: &str = "<LLM_ANSWER>";
pub const KNOWLEDGE_SLOT: &str = "<KNOWLEDGE>";

const SLOTS: [&str; 3] = [QUESTION_SLOT, ANSWER_SLOT, KNOWLEDGE_SLOT];

/// Which template to render.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PromptKind {
    /// Answer a question without extra knowledge.
    Initial,
    /// Unrestricted edit using the knowledge.
    Normal,
    /// Edit that keeps the initial answer's structure.
    Similar,
    /// Edit done as quickly as possible.
    Fast,
}

impl PromptKind {
    pub const ALL: [PromptKind; 4] = [
        PromptKind::Initial,
        PromptKind::Normal,
        PromptKind::Similar,
        PromptKind::Fast,
    ];

    pub fn file_name(self) -> &'static str {
        match self {
            PromptKind::Initial => "initial.txt",
            PromptKind::Normal => "normal.txt",
            PromptKind::Similar => "similar.txt",
            PromptKind::Fast => "fast.txt",
        }
    }

    fn required_slots(self) -> &'static [&'static str] {
        match self {
            PromptKind::Initial => &[QUESTION_SLOT],
            _ => &SLOTS,
        }
    }
}

/// A template and the scenario it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioPrompt {
    kind: PromptKind,
    template: String,
}

impl ScenarioPrompt {
    /// Checks that `template` holds exactly the slots its kind needs.
    pub fn new(kind: PromptKind, template: impl Into<String>) -> Result<Self> {
        let template = template.into();
        for slot in SLOTS {
            let needed = kind.required_slots().contains(&slot);
            if template.contains(slot) != needed {
                return Err(Error::InvalidInput(format!(
                    "{} template {} slot {slot}",
                    kind.file_name(),
                    if needed { "is missing" } else { "must not use" }
                )));
            }
        }
        Ok(Self { kind, template })
    }

    pub fn kind(&self) -> PromptKind {
        self.kind
    }

    pub fn template(&self) -> &str {
        &self.template
    }

    /// Substitutes every slot in one left-to-right pass, so payload text that
    /// itself looks like a slot marker is left alone.
    pub fn render(&self, question: &str, llm_answer: Option<&str>, knowledge: Option<&str>) -> Result<String> {
        let value = |slot: &str| -> Result<&str> {
            let v = match slot {
                QUESTION_SLOT => Some(question),
                ANSWER_SLOT => llm_answer,
                _ => knowledge,
            };
            v.ok_or_else(|| {
                Error::InvalidInput(format!(
                    "{} prompt needs a value for {slot}",
                    self.kind.file_name().trim_end_matches(".txt")
                ))
            })
        };
        // Fail on missing values before doing any work.
        for slot in self.kind.required_slots() {
            value(slot)?;
        }
        let mut out = String::with_capacity(self.template.len() + question.len());
        let mut rest = self.template.as_str();
        while let Some((at, slot)) = SLOTS
            .iter()
            .filter_map(|s| rest.find(s).map(|i| (i, *s)))
            .min_by_key(|(i, _)| *i)
        {
            out.push_str(&rest[..at]);
            out.push_str(value(slot)?);
            rest = &rest[at + slot.len()..];
        }
        out.push_str(rest);
        Ok(out)
    }
}

/// The four templates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PromptSet {
    prompts: Vec<ScenarioPrompt>,
}

impl PromptSet {
    /// English templates compiled into the crate.
    pub fn builtin() -> Self {
        let raw = [
            include_str!("../../prompts/en/initial.txt"),
            include_str!("../../prompts/en/normal.txt"),
            include_str!("../../prompts/en/similar.txt"),
            include_str!("../../prompts/en/fast.txt"),
        ];
        let prompts = PromptKind::ALL
            .into_iter()
            .zip(raw)
            .map(|(kind, text)| ScenarioPrompt::new(kind, strip_final_newline(text)).expect("builtin prompts are valid"))
            .collect();
        Self { prompts }
    }

    /// Loads `initial.txt`, `normal.txt`, `similar.txt` and `fast.txt` from `dir`.
    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        let prompts = PromptKind::ALL
            .into_iter()
            .map(|kind| {
                let path = dir.join(kind.file_name());
                let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
                ScenarioPrompt::new(kind, strip_final_newline(&text))
            })
            .collect::<Result<_>>()?;
        Ok(Self { prompts })
    }

    pub fn get(&self, kind: PromptKind) -> &ScenarioPrompt {
        self.prompts
            .iter()
            .find(|p| p.kind == kind)
            .expect("all kinds present")
    }
}

impl Default for PromptSet {
    fn default() -> Self {
        Self::builtin()
    }
}

fn strip_final_newline(s: &str) -> &str {
    s.strip_suffix("\r\n")
        .or_else(|| s.strip_suffix('\n'))
        .unwrap_or(s)
}

/// Renders a builtin template.
pub fn render_prompt(
    kind: PromptKind,
    question: &str,
    llm_answer: Option<&str>,
    knowledge: Option<&str>,
) -> Result<String> {
    PromptSet::builtin().get(kind).render(question, llm_answer, knowledge)
}
