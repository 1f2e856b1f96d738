//! Evaluation pipeline: metric values per record, their relation to editing
//! effort, and plot-ready CSV reports.

mod bench;
mod compare;
mod csv_out;
mod report;

pub use bench::{bench, write_bench_csv, BenchRow};
pub use compare::{compare_distances, question_key, scenario_compare, ScatterRow, ScenarioComparison, ScenarioFit, Unmatched};
pub use report::{evaluate, CorrelationRow, EvalReport, FitRow, KnnRow, PairRow, SummaryRow};

use crate::baselines::{bleu, levenshtein, rouge_l, ter, MetricName, TokenSequence};
use crate::dataset::EditRecord;
use crate::distance::{compression_distance, compression_distance_with_context, DistanceMode};
use crate::error::{Error, Result};
use crate::text::SymbolText;

/// A measured effort signal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EffortSignal {
    EditTime,
    Keystrokes,
}

impl EffortSignal {
    pub const ALL: [EffortSignal; 2] = [EffortSignal::EditTime, EffortSignal::Keystrokes];

    pub fn as_str(self) -> &'static str {
        match self {
            EffortSignal::EditTime => "edit_time",
            EffortSignal::Keystrokes => "keystrokes",
        }
    }

    pub fn of(self, r: &EditRecord) -> Option<f64> {
        match self {
            EffortSignal::EditTime => r.edit_time_s,
            EffortSignal::Keystrokes => r.keystrokes.map(|k| k as f64),
        }
    }
}

/// Optional rescaling of the compression distance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Normalization {
    /// Raw phrase-count difference.
    #[default]
    None,
    /// Divide by the target length in bytes (at least 1).
    TargetLen,
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Normalization::None),
            "target-len" => Ok(Normalization::TargetLen),
            other => Err(Error::InvalidInput(format!("unknown normalization `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalConfig {
    pub metrics: Vec<MetricName>,
    pub conditions: Vec<DistanceMode>,
    pub knn_k: usize,
    pub train_fraction: f64,
    pub seed: u64,
    pub normalization: Normalization,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            metrics: MetricName::ALL.to_vec(),
            conditions: vec![DistanceMode::Plain],
            knn_k: crate::stats::KnnModel::DEFAULT_K,
            train_fraction: 0.8,
            seed: 42,
            normalization: Normalization::None,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.metrics.is_empty() || self.conditions.is_empty() {
            return Err(Error::InvalidConfig("at least one metric and one condition are needed".into()));
        }
        if self.knn_k == 0 {
            return Err(Error::InvalidConfig("k must be at least 1".into()));
        }
        if !(self.train_fraction > 0.0 && self.train_fraction < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "train fraction {} must lie strictly between 0 and 1",
                self.train_fraction
            )));
        }
        Ok(())
    }
}

/// The text a metric compares against the target: the source alone, or the
/// source followed by a newline and the context.
fn dictionary_text(r: &EditRecord, condition: DistanceMode) -> Result<std::borrow::Cow<'_, str>> {
    match condition {
        DistanceMode::Plain => Ok(r.source.as_str().into()),
        DistanceMode::WithContext => {
            let k = r
                .context
                .as_deref()
                .ok_or_else(|| Error::Validation(format!("record `{}` has no context", r.id)))?;
            Ok(format!("{}\n{k}", r.source).into())
        }
    }
}

/// Compression distance of one record, optionally normalized.
pub fn record_distance(r: &EditRecord, condition: DistanceMode, norm: Normalization) -> Result<f64> {
    let s = SymbolText::from(r.source.as_str());
    let t = SymbolText::from(r.target.as_str());
    let d = match condition {
        DistanceMode::Plain => compression_distance(&s, &t)?,
        DistanceMode::WithContext => {
            let k = r
                .context
                .as_deref()
                .ok_or_else(|| Error::Validation(format!("record `{}` has no context", r.id)))?;
            compression_distance_with_context(&k.into(), &s, &t)?
        }
    }
    .value as f64;
    Ok(match norm {
        Normalization::None => d,
        Normalization::TargetLen => d / r.target.len().max(1) as f64,
    })
}

/// Value of `metric` for one record. The source (plus context) is the
/// candidate/hypothesis side, the target the reference side.
pub fn metric_value(metric: MetricName, condition: DistanceMode, r: &EditRecord, norm: Normalization) -> Result<f64> {
    if metric == MetricName::Compression {
        return record_distance(r, condition, norm);
    }
    let source = dictionary_text(r, condition)?;
    Ok(match metric {
        MetricName::Levenshtein => levenshtein(&source, &r.target).value,
        MetricName::Bleu => bleu(&TokenSequence::new(&source), &TokenSequence::new(&r.target)).value,
        MetricName::RougeL => rouge_l(&TokenSequence::new(&source), &TokenSequence::new(&r.target)).value,
        MetricName::Ter => ter(&TokenSequence::new(&source), &TokenSequence::new(&r.target)).value,
        MetricName::Compression => unreachable!(),
    })
}

/// `a, b, c` or `a, b, … and 12 more`.
pub(crate) fn id_list<'a>(ids: impl IntoIterator<Item = &'a str>) -> String {
    const SHOWN: usize = 20;
    let ids: Vec<&str> = ids.into_iter().collect();
    let mut s = ids.iter().take(SHOWN).copied().collect::<Vec<_>>().join(", ");
    if ids.len() > SHOWN {
        s.push_str(&format!(" and {} more", ids.len() - SHOWN));
    }
    s
}
