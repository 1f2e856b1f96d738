use std::collections::BTreeMap;
use std::path::Path;

use super::csv_out::{cell, write_table};
use super::{record_distance, Normalization};
use crate::dataset::{EditRecord, Scenario};
use crate::distance::DistanceMode;
use crate::error::{Error, Result};
use crate::stats::{linear_fit, PairedSamples, RegressionFit};

const COMPARED: [Scenario; 2] = [Scenario::Similar, Scenario::Fast];

/// Question id of a scenario record: the id with a trailing `:<scenario>` removed.
pub fn question_key(r: &EditRecord) -> &str {
    match r.scenario {
        Some(s) => r
            .id
            .strip_suffix(s.as_str())
            .and_then(|rest| rest.strip_suffix(':'))
            .unwrap_or(&r.id),
        None => &r.id,
    }
}

/// Regression of one scenario's distances on the normal scenario's.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScenarioFit {
    pub scenario: Scenario,
    pub n: usize,
    /// `None` when fewer than two matched questions or constant normal distances.
    pub fit: Option<RegressionFit>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScatterRow {
    pub question_id: String,
    pub normal: Option<f64>,
    pub similar: Option<f64>,
    pub fast: Option<f64>,
}

/// A question present in one scenario of a comparison but not the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unmatched {
    pub question_id: String,
    pub missing: Scenario,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScenarioComparison {
    pub fits: Vec<ScenarioFit>,
    /// Sorted by question id.
    pub scatter: Vec<ScatterRow>,
    pub unmatched: Vec<Unmatched>,
}

/// Compares per-question distances of the normal scenario with those of
/// `similar` and `fast`. Input triples are `(question id, scenario, distance)`.
pub fn compare_distances(values: &[(String, Scenario, f64)]) -> Result<ScenarioComparison> {
    let mut table: BTreeMap<&str, [Option<f64>; 3]> = BTreeMap::new();
    for (q, s, d) in values {
        let slot = match s {
            Scenario::Normal => 0,
            Scenario::Similar => 1,
            Scenario::Fast => 2,
            Scenario::Human => continue,
        };
        let row = table.entry(q.as_str()).or_default();
        if row[slot].replace(*d).is_some() {
            return Err(Error::Validation(format!("question `{q}` has two `{s}` records")));
        }
    }
    let present = |slot: usize| table.values().any(|r| r[slot].is_some());
    let compared: Vec<(usize, Scenario)> = COMPARED
        .into_iter()
        .enumerate()
        .map(|(i, s)| (i + 1, s))
        .filter(|&(slot, _)| present(slot))
        .collect();
    if !present(0) || compared.is_empty() {
        return Err(Error::Validation(
            "scenario comparison needs normal records and similar or fast records".into(),
        ));
    }

    let mut out = ScenarioComparison::default();
    for &(slot, scenario) in &compared {
        let (xs, ys): (Vec<f64>, Vec<f64>) = table
            .values()
            .filter_map(|r| Some((r[0]?, r[slot]?)))
            .unzip();
        let n = xs.len();
        let fit = PairedSamples::new(xs, ys).and_then(|s| linear_fit(&s)).ok();
        out.fits.push(ScenarioFit { scenario, n, fit });
    }
    for (q, row) in &table {
        for &(slot, scenario) in &compared {
            let missing = match (row[0], row[slot]) {
                (Some(_), None) => scenario,
                (None, Some(_)) => Scenario::Normal,
                _ => continue,
            };
            if !out.unmatched.iter().any(|u| u.question_id == *q && u.missing == missing) {
                out.unmatched.push(Unmatched {
                    question_id: (*q).to_owned(),
                    missing,
                });
            }
        }
        out.scatter.push(ScatterRow {
            question_id: (*q).to_owned(),
            normal: row[0],
            similar: row[1],
            fast: row[2],
        });
    }
    Ok(out)
}

/// Compression distances of every scenario record, compared per question.
/// Records without a scenario or with the `human` scenario are ignored.
pub fn scenario_compare(
    records: &[EditRecord],
    condition: DistanceMode,
    normalization: Normalization,
) -> Result<ScenarioComparison> {
    let values = records
        .iter()
        .filter(|r| matches!(r.scenario, Some(s) if s != Scenario::Human))
        .map(|r| {
            let d = record_distance(r, condition, normalization)?;
            Ok((question_key(r).to_owned(), r.scenario.expect("filtered"), d))
        })
        .collect::<Result<Vec<_>>>()?;
    let cmp = compare_distances(&values)?;
    for u in &cmp.unmatched {
        log::warn!("question `{}` has no {} record", u.question_id, u.missing);
    }
    Ok(cmp)
}

impl ScenarioComparison {
    /// Writes `slopes.csv`, `scatter.csv` and `unmatched.csv` into `dir`.
    pub fn write_to(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        write_table(
            &dir.join("slopes.csv"),
            &["pair", "slope", "intercept", "r2", "n"],
            self.fits.iter().map(|f| {
                vec![
                    format!("normal-vs-{}", f.scenario),
                    cell(f.fit.map(|x| x.slope)),
                    cell(f.fit.map(|x| x.intercept)),
                    cell(f.fit.map(|x| x.r2)),
                    f.n.to_string(),
                ]
            }),
        )?;
        write_table(
            &dir.join("scatter.csv"),
            &["question_id", "normal", "similar", "fast"],
            self.scatter
                .iter()
                .map(|r| vec![r.question_id.clone(), cell(r.normal), cell(r.similar), cell(r.fast)]),
        )?;
        write_table(
            &dir.join("unmatched.csv"),
            &["question_id", "missing"],
            self.unmatched
                .iter()
                .map(|u| vec![u.question_id.clone(), u.missing.as_str().to_owned()]),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(normal: &[f64], other: &[f64], s: Scenario) -> Vec<(String, Scenario, f64)> {
        let mut v: Vec<_> = normal
            .iter()
            .enumerate()
            .map(|(i, &d)| (format!("q{i}"), Scenario::Normal, d))
            .collect();
        v.extend(other.iter().enumerate().map(|(i, &d)| (format!("q{i}"), s, d)));
        v
    }

    #[test]
    fn identical_distances_give_unit_slope() {
        let d = [3.0, 7.0, 12.0, 20.0];
        let cmp = compare_distances(&rows(&d, &d, Scenario::Similar)).unwrap();
        let f = cmp.fits[0].fit.unwrap();
        assert!((f.slope - 1.0).abs() < 1e-12 && f.intercept.abs() < 1e-12);
    }

    #[test]
    fn scaled_distances_give_their_factor() {
        let d = [5.0, 10.0, 15.0, 40.0];
        let scaled: Vec<f64> = d.iter().map(|x| 0.8 * x).collect();
        let cmp = compare_distances(&rows(&d, &scaled, Scenario::Fast)).unwrap();
        assert_eq!(cmp.fits.len(), 1);
        assert_eq!(cmp.fits[0].scenario, Scenario::Fast);
        assert!((cmp.fits[0].fit.unwrap().slope - 0.8).abs() < 1e-12);
    }

    #[test]
    fn unmatched_questions_are_reported() {
        let mut v = rows(&[1.0, 2.0, 3.0], &[1.0, 2.0], Scenario::Similar);
        v.push(("extra".into(), Scenario::Similar, 4.0));
        let cmp = compare_distances(&v).unwrap();
        assert_eq!(cmp.fits[0].n, 2);
        assert_eq!(
            cmp.unmatched,
            [
                Unmatched {
                    question_id: "extra".into(),
                    missing: Scenario::Normal
                },
                Unmatched {
                    question_id: "q2".into(),
                    missing: Scenario::Similar
                },
            ]
        );
    }

    #[test]
    fn needs_normal_and_another_scenario() {
        assert!(compare_distances(&rows(&[1.0, 2.0], &[], Scenario::Fast)).is_err());
        assert!(compare_distances(&rows(&[], &[1.0, 2.0], Scenario::Fast)).is_err());
    }

    #[test]
    fn keys_strip_scenario_suffix() {
        let mut r = EditRecord::new("q12:fast", "", "");
        r.scenario = Some(Scenario::Fast);
        assert_eq!(question_key(&r), "q12");
        r.scenario = Some(Scenario::Normal);
        assert_eq!(question_key(&r), "q12:fast");
        r.scenario = None;
        assert_eq!(question_key(&r), "q12:fast");
    }
}
