use std::collections::{BTreeSet, HashSet};
use std::path::Path;

use rayon::prelude::*;

use super::csv_out::{cell, num, write_table};
use super::{id_list, metric_value, EffortSignal, EvalConfig};
use crate::baselines::MetricName;
use crate::dataset::{EditRecord, Scenario};
use crate::distance::DistanceMode;
use crate::error::{Error, Result};
use crate::stats::{linear_fit, pearson_with_pvalue, r2_score, train_test_split, KnnModel, PairedSamples};

/// Annotator group covering every record.
pub const ALL_ANNOTATORS: &str = "all";

/// One record with every requested metric value.
#[derive(Clone, Debug, PartialEq)]
pub struct PairRow {
    pub id: String,
    pub annotator: Option<String>,
    pub scenario: Option<Scenario>,
    pub edit_time_s: Option<f64>,
    pub keystrokes: Option<u64>,
    /// One value per entry of [`EvalReport::columns`].
    pub values: Vec<f64>,
}

impl PairRow {
    fn signal(&self, s: EffortSignal) -> Option<f64> {
        match s {
            EffortSignal::EditTime => self.edit_time_s,
            EffortSignal::Keystrokes => self.keystrokes.map(|k| k as f64),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationRow {
    pub metric: MetricName,
    pub condition: DistanceMode,
    pub signal: EffortSignal,
    pub annotator: String,
    /// `None` when the subset is too small or constant.
    pub pearson_r: Option<f64>,
    pub p_value: Option<f64>,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KnnRow {
    pub metric: MetricName,
    pub condition: DistanceMode,
    pub r2_time: Option<f64>,
    pub r2_keystrokes: Option<f64>,
}

impl KnnRow {
    fn get(&self, s: EffortSignal) -> Option<f64> {
        match s {
            EffortSignal::EditTime => self.r2_time,
            EffortSignal::Keystrokes => self.r2_keystrokes,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitRow {
    pub metric: MetricName,
    pub condition: DistanceMode,
    pub signal: EffortSignal,
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    pub r2: Option<f64>,
    pub n: usize,
}

/// Headline numbers for the primary effort signal over all annotators.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub metric: MetricName,
    pub condition: DistanceMode,
    pub pearson_r: Option<f64>,
    pub p_value: Option<f64>,
    pub knn_r2: Option<f64>,
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalReport {
    pub columns: Vec<(MetricName, DistanceMode)>,
    /// Sorted by id.
    pub pairs: Vec<PairRow>,
    pub correlations: Vec<CorrelationRow>,
    pub knn: Vec<KnnRow>,
    pub fits: Vec<FitRow>,
    /// Edit time when any record has it, keystrokes otherwise.
    pub primary_signal: EffortSignal,
    pub summary: Vec<SummaryRow>,
}

fn validate(records: &[EditRecord], config: &EvalConfig) -> Result<()> {
    config.validate()?;
    if records.is_empty() {
        return Err(Error::Validation("dataset has no records".into()));
    }
    let mut seen = HashSet::new();
    for r in records {
        r.check().map_err(|m| Error::Validation(format!("record `{}`: {m}", r.id)))?;
        if !seen.insert(r.id.as_str()) {
            return Err(Error::Validation(format!("duplicate id `{}`", r.id)));
        }
    }
    let mut no_effort: Vec<&str> = records
        .iter()
        .filter(|r| r.edit_time_s.is_none() && r.keystrokes.is_none())
        .map(|r| r.id.as_str())
        .collect();
    if !no_effort.is_empty() {
        no_effort.sort_unstable();
        return Err(Error::Validation(format!(
            "records without edit_time_s or keystrokes: {}",
            id_list(no_effort)
        )));
    }
    if config.conditions.contains(&DistanceMode::WithContext) {
        let mut missing: Vec<&str> = records
            .iter()
            .filter(|r| r.context.is_none())
            .map(|r| r.id.as_str())
            .collect();
        if !missing.is_empty() {
            missing.sort_unstable();
            return Err(Error::Validation(format!(
                "with_context needs a context on every record; missing in: {}",
                id_list(missing)
            )));
        }
    }
    Ok(())
}

/// `(x, y)` for rows in `group` that carry `signal`.
fn paired(pairs: &[PairRow], col: usize, signal: EffortSignal, group: Option<&str>) -> (Vec<f64>, Vec<f64>) {
    pairs
        .iter()
        .filter(|p| group.is_none_or(|g| p.annotator.as_deref() == Some(g)))
        .filter_map(|p| p.signal(signal).map(|y| (p.values[col], y)))
        .unzip()
}

fn correlation(xs: Vec<f64>, ys: Vec<f64>) -> (Option<f64>, Option<f64>) {
    match PairedSamples::new(xs, ys).and_then(|s| pearson_with_pvalue(&s)) {
        Ok((r, p)) => (Some(r), Some(p)),
        Err(e) => {
            log::debug!("correlation skipped: {e}");
            (None, None)
        }
    }
}

fn knn_r2(xs: Vec<f64>, ys: Vec<f64>, config: &EvalConfig) -> Option<f64> {
    let rows: Vec<(f64, f64)> = xs.into_iter().zip(ys).collect();
    let run = || -> Result<f64> {
        let (train, test) = train_test_split(&rows, config.train_fraction, config.seed)?;
        let (tx, ty): (Vec<f64>, Vec<f64>) = train.into_iter().unzip();
        let model = KnnModel::fit(&PairedSamples::new(tx, ty)?, config.knn_k)?;
        let (qx, qy): (Vec<f64>, Vec<f64>) = test.into_iter().unzip();
        r2_score(&qy, &model.predict(&qx))
    };
    run().map_err(|e| log::debug!("knn skipped: {e}")).ok()
}

/// Computes every requested metric for every record and relates each to the
/// available effort signals.
///
/// Records are processed in parallel; all output is sorted by record id, so
/// results do not depend on input order or thread count.
pub fn evaluate(records: &[EditRecord], config: &EvalConfig) -> Result<EvalReport> {
    validate(records, config)?;
    let columns: Vec<(MetricName, DistanceMode)> = config
        .metrics
        .iter()
        .flat_map(|&m| config.conditions.iter().map(move |&c| (m, c)))
        .collect();

    let mut sorted: Vec<&EditRecord> = records.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    let pairs = sorted
        .par_iter()
        .map(|r| {
            let values = columns
                .iter()
                .map(|&(m, c)| metric_value(m, c, r, config.normalization))
                .collect::<Result<Vec<f64>>>()?;
            Ok(PairRow {
                id: r.id.clone(),
                annotator: r.annotator.clone(),
                scenario: r.scenario,
                edit_time_s: r.edit_time_s,
                keystrokes: r.keystrokes,
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let signals: Vec<EffortSignal> = EffortSignal::ALL
        .into_iter()
        .filter(|&s| pairs.iter().any(|p| p.signal(s).is_some()))
        .collect();
    let primary_signal = signals[0];
    let annotators: BTreeSet<&str> = pairs.iter().filter_map(|p| p.annotator.as_deref()).collect();
    let groups: Vec<Option<&str>> = std::iter::once(None).chain(annotators.into_iter().map(Some)).collect();

    let mut correlations = Vec::new();
    let mut knn = Vec::new();
    let mut fits = Vec::new();
    for (col, &(metric, condition)) in columns.iter().enumerate() {
        for &signal in &signals {
            for &group in &groups {
                let (xs, ys) = paired(&pairs, col, signal, group);
                let n = xs.len();
                let (pearson_r, p_value) = correlation(xs, ys);
                correlations.push(CorrelationRow {
                    metric,
                    condition,
                    signal,
                    annotator: group.unwrap_or(ALL_ANNOTATORS).to_owned(),
                    pearson_r,
                    p_value,
                    n,
                });
            }
            let (xs, ys) = paired(&pairs, col, signal, None);
            let n = xs.len();
            let fit = PairedSamples::new(xs, ys).and_then(|s| linear_fit(&s)).ok();
            fits.push(FitRow {
                metric,
                condition,
                signal,
                slope: fit.map(|f| f.slope),
                intercept: fit.map(|f| f.intercept),
                r2: fit.map(|f| f.r2),
                n,
            });
        }
        let r2 = |s: EffortSignal| {
            let (xs, ys) = paired(&pairs, col, s, None);
            if xs.is_empty() {
                None
            } else {
                knn_r2(xs, ys, config)
            }
        };
        knn.push(KnnRow {
            metric,
            condition,
            r2_time: r2(EffortSignal::EditTime),
            r2_keystrokes: r2(EffortSignal::Keystrokes),
        });
    }

    let summary = columns
        .iter()
        .enumerate()
        .map(|(col, &(metric, condition))| {
            let corr = correlations
                .iter()
                .find(|c| {
                    c.metric == metric
                        && c.condition == condition
                        && c.signal == primary_signal
                        && c.annotator == ALL_ANNOTATORS
                })
                .expect("every column has an overall correlation");
            let fit = fits
                .iter()
                .find(|f| f.metric == metric && f.condition == condition && f.signal == primary_signal)
                .expect("every column has a fit");
            SummaryRow {
                metric,
                condition,
                pearson_r: corr.pearson_r,
                p_value: corr.p_value,
                knn_r2: knn[col].get(primary_signal),
                slope: fit.slope,
                intercept: fit.intercept,
                n: corr.n,
            }
        })
        .collect();

    Ok(EvalReport {
        columns,
        pairs,
        correlations,
        knn,
        fits,
        primary_signal,
        summary,
    })
}

impl EvalReport {
    /// Names of the metric columns in `pairs.csv`, e.g. `compression_plain`.
    pub fn column_names(&self) -> Vec<String> {
        self.columns
            .iter()
            .map(|(m, c)| format!("{}_{}", m.as_str(), c.as_str()))
            .collect()
    }

    /// Writes `correlations.csv`, `knn.csv`, `pairs.csv`, `fit.csv` and
    /// `summary.csv` into `dir`, creating it if needed.
    pub fn write_to(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        write_table(
            &dir.join("correlations.csv"),
            &["metric", "condition", "signal", "annotator", "pearson_r", "p_value", "n"],
            self.correlations.iter().map(|c| {
                vec![
                    c.metric.as_str().into(),
                    c.condition.as_str().into(),
                    c.signal.as_str().into(),
                    c.annotator.clone(),
                    cell(c.pearson_r),
                    cell(c.p_value),
                    c.n.to_string(),
                ]
            }),
        )?;
        write_table(
            &dir.join("knn.csv"),
            &["metric", "condition", "r2_time", "r2_keystrokes"],
            self.knn.iter().map(|k| {
                vec![
                    k.metric.as_str().into(),
                    k.condition.as_str().into(),
                    cell(k.r2_time),
                    cell(k.r2_keystrokes),
                ]
            }),
        )?;
        let mut headers = vec!["id", "annotator", "scenario", "edit_time_s", "keystrokes"];
        let names = self.column_names();
        headers.extend(names.iter().map(String::as_str));
        write_table(
            &dir.join("pairs.csv"),
            &headers,
            self.pairs.iter().map(|p| {
                let mut row = vec![
                    p.id.clone(),
                    p.annotator.clone().unwrap_or_default(),
                    p.scenario.map(|s| s.as_str().to_owned()).unwrap_or_default(),
                    cell(p.edit_time_s),
                    p.keystrokes.map(|k| k.to_string()).unwrap_or_default(),
                ];
                row.extend(p.values.iter().copied().map(num));
                row
            }),
        )?;
        write_table(
            &dir.join("fit.csv"),
            &["metric", "condition", "signal", "slope", "intercept", "r2", "n"],
            self.fits.iter().map(|f| {
                vec![
                    f.metric.as_str().into(),
                    f.condition.as_str().into(),
                    f.signal.as_str().into(),
                    cell(f.slope),
                    cell(f.intercept),
                    cell(f.r2),
                    f.n.to_string(),
                ]
            }),
        )?;
        write_table(
            &dir.join("summary.csv"),
            &["metric", "condition", "pearson_r", "p_value", "knn_r2", "slope", "intercept", "n"],
            self.summary.iter().map(|s| {
                vec![
                    s.metric.as_str().into(),
                    s.condition.as_str().into(),
                    cell(s.pearson_r),
                    cell(s.p_value),
                    cell(s.knn_r2),
                    cell(s.slope),
                    cell(s.intercept),
                    s.n.to_string(),
                ]
            }),
        )
    }
}
