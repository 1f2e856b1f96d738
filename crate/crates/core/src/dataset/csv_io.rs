use std::path::Path;

use super::record::{EditRecord, FIELDS};
use crate::error::{Error, Result};

/// A CSV file as header names plus string cells.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CsvTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == name)
    }

    /// Cell at `row` under header `name`.
    pub fn get(&self, row: usize, name: &str) -> Option<&str> {
        let col = self.column(name)?;
        self.rows.get(row)?.get(col).map(String::as_str)
    }
}

/// Reads any headed CSV file; every row must have the header's width.
pub fn read_csv_table(path: impl AsRef<Path>) -> Result<CsvTable> {
    let path = path.as_ref();
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.iter().map(str::to_owned).collect();
    let rows = reader
        .records()
        .map(|r| r.map(|rec| rec.iter().map(str::to_owned).collect()))
        .collect::<std::result::Result<_, _>>()?;
    Ok(CsvTable { headers, rows })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

/// Writes records with the JSONL field names as columns. Absent values become empty cells.
pub fn write_csv_records(records: &[EditRecord], path: impl AsRef<Path>) -> Result<()> {
    let mut w = csv::Writer::from_path(path.as_ref())?;
    w.write_record(FIELDS)?;
    for r in records {
        w.write_record([
            r.id.clone(),
            r.source.clone(),
            r.target.clone(),
            opt(&r.context),
            opt(&r.edit_time_s),
            opt(&r.keystrokes),
            opt(&r.annotator),
            opt(&r.scenario),
        ])?;
    }
    w.flush().map_err(|e| Error::io(path.as_ref(), e))
}

/// Inverse of [`write_csv_records`]. Empty optional cells read back as `None`.
pub fn read_csv_records(path: impl AsRef<Path>) -> Result<Vec<EditRecord>> {
    let table = read_csv_table(path)?;
    let col = |name: &str| {
        table
            .column(name)
            .ok_or_else(|| Error::Validation(format!("missing CSV column `{name}`")))
    };
    let (id, source, target) = (col("id")?, col("source")?, col("target")?);
    let optional = |name: &str| table.column(name);
    let (context, time, keys, annotator, scenario) = (
        optional("context"),
        optional("edit_time_s"),
        optional("keystrokes"),
        optional("annotator"),
        optional("scenario"),
    );
    let cell = |row: &[String], c: Option<usize>| -> Option<String> {
        c.map(|c| row[c].clone()).filter(|s| !s.is_empty())
    };
    table
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let bad = |what: &str, e: &dyn std::fmt::Display| {
                Error::Validation(format!("CSV row {}: bad {what}: {e}", i + 2))
            };
            Ok(EditRecord {
                id: row[id].clone(),
                source: row[source].clone(),
                target: row[target].clone(),
                context: cell(row, context),
                edit_time_s: cell(row, time)
                    .map(|s| s.parse().map_err(|e| bad("edit_time_s", &e)))
                    .transpose()?,
                keystrokes: cell(row, keys)
                    .map(|s| s.parse().map_err(|e| bad("keystrokes", &e)))
                    .transpose()?,
                annotator: cell(row, annotator),
                scenario: cell(row, scenario)
                    .map(|s| s.parse().map_err(|e| bad("scenario", &e)))
                    .transpose()?,
            })
        })
        .collect()
}
