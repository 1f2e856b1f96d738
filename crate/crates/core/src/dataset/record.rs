use serde::{Deserialize, Serialize};

/// How an edit was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    Normal,
    Similar,
    Fast,
    Human,
}

impl Scenario {
    pub fn as_str(self) -> &'static str {
        match self {
            Scenario::Normal => "normal",
            Scenario::Similar => "similar",
            Scenario::Fast => "fast",
            Scenario::Human => "human",
        }
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Scenario {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "normal" => Ok(Scenario::Normal),
            "similar" => Ok(Scenario::Similar),
            "fast" => Ok(Scenario::Fast),
            "human" => Ok(Scenario::Human),
            other => Err(crate::Error::InvalidInput(format!("unknown scenario `{other}`"))),
        }
    }
}

/// One edited text with optional effort signals.
///
/// Field order here is the serialized field order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EditRecord {
    pub id: String,
    /// The text before editing.
    pub source: String,
    /// The text after editing.
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edit_time_s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub keystrokes: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annotator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenario: Option<Scenario>,
}

impl EditRecord {
    pub fn new(id: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            source: source.into(),
            target: target.into(),
            context: None,
            edit_time_s: None,
            keystrokes: None,
            annotator: None,
            scenario: None,
        }
    }

    /// Field-level checks that do not depend on the rest of the dataset.
    pub(crate) fn check(&self) -> Result<(), String> {
        if self.id.is_empty() {
            return Err("`id` must be nonempty".into());
        }
        if let Some(t) = self.edit_time_s {
            if !t.is_finite() || t < 0.0 {
                return Err(format!("`edit_time_s` must be a non-negative number, got {t}"));
            }
        }
        Ok(())
    }
}

pub(crate) const FIELDS: [&str; 8] = [
    "id",
    "source",
    "target",
    "context",
    "edit_time_s",
    "keystrokes",
    "annotator",
    "scenario",
];
