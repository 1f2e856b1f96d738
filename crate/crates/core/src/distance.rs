//! Compression distance `d(S → T)`: the number of extra LZ77 phrases needed to
//! parse `T` once `S` (and optionally a context text `K`) is available as a
//! dictionary.
//!
//! With `δ` an out-of-band delimiter,
//!
//! ```text
//! d(S → T)      = LZ(S·δ·T) − LZ(S·δ)
//! d_K(S → T)    = LZ(S·δ·K·δ'·T) − LZ(S·δ·K·δ')
//! ```
//!
//! Subtracting `LZ(S·δ)` instead of `LZ(S)` cancels the delimiter's own phrase,
//! so `d(S → "") = 0`. No phrase can cross a delimiter because a delimiter has
//! no earlier occurrence, so the parse of the prefix is unaffected by what
//! follows it. Both terms therefore come out of a single parse of the full
//! concatenation: `d` is the number of phrases that start inside `T`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lz77::phrase_starts;
use crate::text::SymbolText;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistancePair {
    pub source: SymbolText,
    pub target: SymbolText,
    pub context: Option<SymbolText>,
}

impl DistancePair {
    pub fn new(source: impl Into<SymbolText>, target: impl Into<SymbolText>) -> Self {
        Self {
            source: source.into(),
            target: target.into(),
            context: None,
        }
    }

    pub fn with_context(mut self, context: impl Into<SymbolText>) -> Self {
        self.context = Some(context.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DistanceResult {
    /// `lz_concat - lz_source`.
    pub value: usize,
    /// Phrase count of the dictionary prefix (`S·δ`, or `S·δ·K·δ'` with context).
    pub lz_source: usize,
    /// Phrase count of the whole concatenation.
    pub lz_concat: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistanceMode {
    Plain,
    WithContext,
}

impl DistanceMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceMode::Plain => "plain",
            DistanceMode::WithContext => "with_context",
        }
    }
}

impl std::str::FromStr for DistanceMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(DistanceMode::Plain),
            "with_context" => Ok(DistanceMode::WithContext),
            other => Err(Error::InvalidInput(format!("unknown condition `{other}`"))),
        }
    }
}

fn check_no_delimiter(name: &str, t: &SymbolText) -> Result<()> {
    if t.contains_delimiter() {
        return Err(Error::InvalidInput(format!(
            "{name} contains a reserved delimiter symbol"
        )));
    }
    Ok(())
}

/// Distance over `dictionary parts · target`, joined by distinct delimiters.
fn distance_over(dictionary: &[&SymbolText], target: &SymbolText) -> Result<DistanceResult> {
    let mut parts: Vec<&SymbolText> = dictionary.to_vec();
    parts.push(target);
    let joined = SymbolText::join_delimited(&parts);
    let target_start = joined.len() - target.len();
    let starts = phrase_starts(&joined)?;
    let lz_source = starts.partition_point(|&p| p < target_start);
    Ok(DistanceResult {
        value: starts.len() - lz_source,
        lz_source,
        lz_concat: starts.len(),
    })
}

/// `d(source → target)`.
pub fn compression_distance(source: &SymbolText, target: &SymbolText) -> Result<DistanceResult> {
    check_no_delimiter("source", source)?;
    check_no_delimiter("target", target)?;
    distance_over(&[source], target)
}

/// `d(source → target)` with `context` appended to the dictionary after `source`.
pub fn compression_distance_with_context(
    context: &SymbolText,
    source: &SymbolText,
    target: &SymbolText,
) -> Result<DistanceResult> {
    check_no_delimiter("source", source)?;
    check_no_delimiter("target", target)?;
    check_no_delimiter("context", context)?;
    distance_over(&[source, context], target)
}

/// Distance for one pair under `mode`.
pub fn pair_distance(pair: &DistancePair, mode: DistanceMode) -> Result<DistanceResult> {
    match mode {
        DistanceMode::Plain => compression_distance(&pair.source, &pair.target),
        DistanceMode::WithContext => {
            let context = pair.context.as_ref().ok_or_else(|| {
                Error::InvalidInput("with_context mode requires a context text".into())
            })?;
            compression_distance_with_context(context, &pair.source, &pair.target)
        }
    }
}

/// Distances for every pair, in input order. Rows are evaluated in parallel;
/// a failing row yields its own `Err` without affecting the others.
pub fn batch_distance(pairs: &[DistancePair], mode: DistanceMode) -> Vec<Result<DistanceResult>> {
    pairs.par_iter().map(|p| pair_distance(p, mode)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str, t: &str) -> usize {
        compression_distance(&s.into(), &t.into()).unwrap().value
    }

    fn dk(k: &str, s: &str, t: &str) -> usize {
        compression_distance_with_context(&k.into(), &s.into(), &t.into())
            .unwrap()
            .value
    }

    #[test]
    fn empty_source_reduces_to_target_complexity() {
        let r = compression_distance(&"".into(), &"ababab".into()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.lz_source, 1);
    }

    #[test]
    fn worked_example_ab_abab() {
        let r = compression_distance(&"ab".into(), &"abab".into()).unwrap();
        assert_eq!((r.lz_source, r.lz_concat, r.value), (3, 5, 2));
    }

    #[test]
    fn copy_of_source_costs_one_phrase() {
        assert_eq!(d("the quick brown fox", "the quick brown fox"), 1);
        assert_eq!(d("x", ""), 0);
    }

    #[test]
    fn context_examples() {
        assert_eq!(dk("xyz", "ab", "abxyz"), 2);
        assert_eq!(dk("", "hello", "help"), d("hello", "help"));
        assert_eq!(dk("knowledge text", "answer", "knowledge text"), 1);
    }

    #[test]
    fn asymmetric_fixture() {
        // Target is a substring of the source in one direction only.
        assert_eq!(d("xxabcdefyy", "abcdef"), 1);
        assert_eq!(d("abcdef", "xxabcdefyy"), 5);
    }

    #[test]
    fn delimiter_in_input_is_rejected() {
        let bad = SymbolText::new(vec![97, 256], 257).unwrap();
        assert!(compression_distance(&bad, &"a".into()).is_err());
        assert!(compression_distance_with_context(&bad, &"a".into(), &"a".into()).is_err());
    }

    #[test]
    fn batch_keeps_order_and_isolates_failures() {
        assert!(batch_distance(&[], DistanceMode::Plain).is_empty());
        let pairs = vec![
            DistancePair::new("abc", "abc").with_context("zzz"),
            DistancePair::new("abc", "xyz"),
        ];
        let out = batch_distance(&pairs, DistanceMode::WithContext);
        assert_eq!(out[0].as_ref().unwrap().value, 1);
        assert!(out[1].is_err());
        let plain = batch_distance(&pairs, DistanceMode::Plain);
        assert_eq!(plain[1].as_ref().unwrap().value, 3);
    }
}
