use std::collections::HashSet;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use log::warn;

use super::record::{EditRecord, FIELDS};
use crate::error::{Error, Result};

/// A line that could not be turned into a record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for LineError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct LoadedDataset {
    /// Accepted records, in file order.
    pub records: Vec<EditRecord>,
    /// Rejected lines.
    pub errors: Vec<LineError>,
    /// Number of ignored keys not in the record schema, summed over all lines.
    pub unknown_fields: usize,
}

/// Reads one JSON object per line. Blank lines are skipped.
///
/// Malformed lines are collected in [`LoadedDataset::errors`]; a duplicated
/// `id` fails the whole load.
pub fn load_jsonl(path: impl AsRef<Path>) -> Result<LoadedDataset> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let text = String::from_utf8(bytes).map_err(|e| Error::io(path, std::io::Error::new(std::io::ErrorKind::InvalidData, e)))?;
    let loaded = parse_jsonl(&text)?;
    if loaded.unknown_fields > 0 {
        warn!(
            "{}: ignored {} unknown field(s)",
            path.display(),
            loaded.unknown_fields
        );
    }
    Ok(loaded)
}

/// [`load_jsonl`] over in-memory text.
pub fn parse_jsonl(text: &str) -> Result<LoadedDataset> {
    let mut out = LoadedDataset::default();
    let mut seen = HashSet::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let reject = |message: String| LineError {
            line: line_no,
            message,
        };
        let value: serde_json::Value = match serde_json::from_str(line) {
            Ok(v) => v,
            Err(e) => {
                out.errors.push(reject(format!("invalid JSON: {e}")));
                continue;
            }
        };
        let Some(object) = value.as_object() else {
            out.errors.push(reject("expected a JSON object".into()));
            continue;
        };
        out.unknown_fields += object.keys().filter(|k| !FIELDS.contains(&k.as_str())).count();
        let record: EditRecord = match serde_json::from_value(value) {
            Ok(r) => r,
            Err(e) => {
                out.errors.push(reject(e.to_string()));
                continue;
            }
        };
        if let Err(msg) = record.check() {
            out.errors.push(reject(msg));
            continue;
        }
        if !seen.insert(record.id.clone()) {
            return Err(Error::Validation(format!(
                "duplicate id `{}` on line {line_no}",
                record.id
            )));
        }
        out.records.push(record);
    }
    Ok(out)
}

pub fn write_jsonl(records: &[EditRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    for r in records {
        serde_json::to_writer(&mut w, r).map_err(|e| Error::io(path, e.into()))?;
        w.write_all(b"\n").map_err(|e| Error::io(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Scenario;
    use proptest::prelude::*;

    #[test]
    fn empty_input() {
        let d = parse_jsonl("").unwrap();
        assert!(d.records.is_empty() && d.errors.is_empty());
    }

    #[test]
    fn one_line_with_all_fields() {
        let line = r#"{"id":"a","source":"s","target":"t","context":"k","edit_time_s":12.5,"keystrokes":40,"annotator":"A0","scenario":"human"}"#;
        let d = parse_jsonl(line).unwrap();
        let r = &d.records[0];
        assert_eq!(r.id, "a");
        assert_eq!(r.edit_time_s, Some(12.5));
        assert_eq!(r.keystrokes, Some(40));
        assert_eq!(r.scenario, Some(Scenario::Human));
    }

    #[test]
    fn missing_target_is_rejected_with_line_number() {
        let text = "{\"id\":\"a\",\"source\":\"s\",\"target\":\"t\"}\n\n{\"id\":\"b\",\"source\":\"s\"}\n";
        let d = parse_jsonl(text).unwrap();
        assert_eq!(d.records.len(), 1);
        assert_eq!(d.errors.len(), 1);
        assert_eq!(d.errors[0].line, 3);
        assert!(d.errors[0].message.contains("target"));
    }

    #[test]
    fn unknown_fields_are_counted() {
        let d = parse_jsonl(r#"{"id":"a","source":"s","target":"t","extra":1,"more":2}"#).unwrap();
        assert_eq!(d.unknown_fields, 2);
        assert_eq!(d.records.len(), 1);
    }

    #[test]
    fn duplicate_id_fails() {
        let text = "{\"id\":\"a\",\"source\":\"\",\"target\":\"\"}\n{\"id\":\"a\",\"source\":\"\",\"target\":\"\"}";
        let err = parse_jsonl(text).unwrap_err();
        assert!(err.to_string().contains("`a`"));
    }

    #[test]
    fn negative_time_and_bad_scenario_rejected() {
        let text = "{\"id\":\"a\",\"source\":\"\",\"target\":\"\",\"edit_time_s\":-1}\n{\"id\":\"b\",\"source\":\"\",\"target\":\"\",\"scenario\":\"slow\"}\n[1,2]";
        let d = parse_jsonl(text).unwrap();
        assert_eq!(d.errors.iter().map(|e| e.line).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    proptest! {
        #[test]
        fn never_panics_on_garbage(s in "\\PC{0,200}") {
            let _ = parse_jsonl(&s);
        }

        #[test]
        fn never_panics_on_json_shaped_garbage(
            s in r#"\{("(id|source|target|edit_time_s|keystrokes|scenario)":(null|-?[0-9]{1,3}(\.[0-9])?|"[a-z]{0,4}"|\[\]|\{\}),?){0,6}\}"#
        ) {
            let _ = parse_jsonl(&s);
        }
    }
}
