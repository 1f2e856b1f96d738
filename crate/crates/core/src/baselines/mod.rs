//! Reference metrics: Levenshtein, BLEU, ROUGE-L and TER.

mod bleu;
mod levenshtein;
mod rouge;
mod ter;
mod tokens;

pub use bleu::bleu;
pub use levenshtein::{levenshtein, levenshtein_distance};
pub use rouge::rouge_l;
pub use ter::{ter, word_edit_distance};
pub use tokens::TokenSequence;

/// Whether larger values mean more similar or more different texts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Similarity,
    Difference,
}

/// Stable metric identifiers, also used as report column names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricName {
    Compression,
    Levenshtein,
    Bleu,
    RougeL,
    Ter,
}

impl MetricName {
    pub const ALL: [MetricName; 5] = [
        MetricName::Compression,
        MetricName::Levenshtein,
        MetricName::Bleu,
        MetricName::RougeL,
        MetricName::Ter,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MetricName::Compression => "compression",
            MetricName::Levenshtein => "levenshtein",
            MetricName::Bleu => "bleu",
            MetricName::RougeL => "rouge_l",
            MetricName::Ter => "ter",
        }
    }

    pub fn orientation(self) -> Orientation {
        match self {
            MetricName::Bleu | MetricName::RougeL => Orientation::Similarity,
            _ => Orientation::Difference,
        }
    }
}

impl std::fmt::Display for MetricName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MetricName {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        MetricName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| crate::Error::InvalidInput(format!("unknown metric `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricValue {
    pub name: MetricName,
    pub value: f64,
}

impl MetricValue {
    pub(crate) fn new(name: MetricName, value: f64) -> Self {
        Self { name, value }
    }

    pub fn orientation(&self) -> Orientation {
        self.name.orientation()
    }
}
