use super::{MetricName, MetricValue, TokenSequence};

/// ROUGE-L F1 (β = 1) from the longest common subsequence of tokens.
///
/// Two empty sequences score 1.0; one empty sequence scores 0.0.
pub fn rouge_l(candidate: &TokenSequence, reference: &TokenSequence) -> MetricValue {
    let value = if candidate.is_empty() && reference.is_empty() {
        1.0
    } else {
        let lcs = lcs_len(candidate.tokens(), reference.tokens());
        if lcs == 0 {
            0.0
        } else {
            let p = lcs as f64 / candidate.len() as f64;
            let r = lcs as f64 / reference.len() as f64;
            2.0 * p * r / (p + r)
        }
    };
    MetricValue::new(MetricName::RougeL, value)
}

fn lcs_len<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}
