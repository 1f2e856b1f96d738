use std::collections::HashMap;

use super::{MetricName, MetricValue, TokenSequence};

const MAX_ORDER: usize = 4;

/// Sentence-level BLEU with floor smoothing.
///
/// Uses n-gram orders `1..=min(4, |candidate|)`. An order with zero clipped
/// matches contributes `1 / (2 · candidate n-gram count)` instead of zero.
/// The brevity penalty `exp(1 − r/c)` applies when the candidate is shorter
/// than the reference. An empty candidate scores 0.0.
pub fn bleu(candidate: &TokenSequence, reference: &TokenSequence) -> MetricValue {
    MetricValue::new(MetricName::Bleu, bleu_score(candidate.tokens(), reference.tokens()))
}

fn ngram_counts(tokens: &[String], n: usize) -> HashMap<&[String], usize> {
    let mut counts = HashMap::new();
    for gram in tokens.windows(n) {
        *counts.entry(gram).or_insert(0) += 1;
    }
    counts
}

fn bleu_score(cand: &[String], reference: &[String]) -> f64 {
    let c = cand.len();
    if c == 0 {
        return 0.0;
    }
    let orders = c.min(MAX_ORDER);
    let mut log_sum = 0.0;
    for n in 1..=orders {
        let total = c + 1 - n;
        let ref_counts = ngram_counts(reference, n);
        let matches: usize = ngram_counts(cand, n)
            .into_iter()
            .map(|(gram, count)| count.min(ref_counts.get(gram).copied().unwrap_or(0)))
            .sum();
        let precision = if matches == 0 {
            1.0 / (2.0 * total as f64)
        } else {
            matches as f64 / total as f64
        };
        log_sum += precision.ln();
    }
    let r = reference.len();
    let brevity = if c < r {
        (1.0 - r as f64 / c as f64).exp()
    } else {
        1.0
    };
    brevity * (log_sum / orders as f64).exp()
}
