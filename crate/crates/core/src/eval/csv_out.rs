use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Shortest round-trip form, with an exponent for very large or small values.
pub(crate) fn num(x: f64) -> String {
    format!("{x:?}")
}

pub(crate) fn cell(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

pub(crate) fn write_table<I>(path: &Path, headers: &[&str], rows: I) -> Result<()>
where
    I: IntoIterator<Item = Vec<String>>,
{
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(headers)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}
