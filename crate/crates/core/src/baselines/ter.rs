//! Translation edit rate with greedy block shifts.
//!
//! Each round considers moving a contiguous hypothesis block (at most
//! [`MAX_SHIFT_SIZE`] tokens) so that it lines up with an identical reference
//! block, and applies the move that lowers the word edit distance the most.
//! A move is applied only when the edit-distance reduction exceeds its own cost
//! of one, so the final `(shifts + edits)` never exceeds the unshifted edit
//! distance. Candidate blocks must contain a hypothesis word that is not
//! currently matched, and must target a reference span that is not fully
//! matched already.

use super::{MetricName, MetricValue, TokenSequence};

pub const MAX_SHIFT_SIZE: usize = 10;
/// Largest allowed distance, in tokens, between a block and its destination.
pub const MAX_SHIFT_DISTANCE: usize = 50;

/// `(shifts + edits) / |reference|`.
///
/// An empty reference scores `|hypothesis|` (0.0 when both are empty).
pub fn ter(hypothesis: &TokenSequence, reference: &TokenSequence) -> MetricValue {
    let value = if reference.is_empty() {
        hypothesis.len() as f64
    } else {
        let (shifts, edits) = shifted_edits(hypothesis.tokens(), reference.tokens());
        (shifts + edits) as f64 / reference.len() as f64
    };
    MetricValue::new(MetricName::Ter, value)
}

/// Word-level Levenshtein distance.
pub fn word_edit_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = (prev[j] + usize::from(x != y))
                .min(prev[j + 1] + 1)
                .min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Alignment of a minimum edit script.
struct Alignment {
    /// For each hypothesis token, whether it is matched exactly.
    hyp_matched: Vec<bool>,
    /// For each reference token, whether it is matched exactly.
    ref_matched: Vec<bool>,
    /// For each reference index, the hypothesis index it sits against.
    ref_to_hyp: Vec<usize>,
}

fn align<T: PartialEq>(h: &[T], r: &[T]) -> Alignment {
    let (n, m) = (h.len(), r.len());
    let mut d = vec![vec![0usize; m + 1]; n + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for j in 0..=m {
        d[0][j] = j;
    }
    for i in 1..=n {
        for j in 1..=m {
            d[i][j] = (d[i - 1][j - 1] + usize::from(h[i - 1] != r[j - 1]))
                .min(d[i - 1][j] + 1)
                .min(d[i][j - 1] + 1);
        }
    }
    let mut hyp_matched = vec![false; n];
    let mut ref_matched = vec![false; m];
    let mut ref_to_hyp = vec![0; m];
    let (mut i, mut j) = (n, m);
    while i > 0 || j > 0 {
        if i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + usize::from(h[i - 1] != r[j - 1]) {
            if h[i - 1] == r[j - 1] {
                hyp_matched[i - 1] = true;
                ref_matched[j - 1] = true;
            }
            ref_to_hyp[j - 1] = i - 1;
            i -= 1;
            j -= 1;
        } else if i > 0 && d[i][j] == d[i - 1][j] + 1 {
            i -= 1;
        } else {
            ref_to_hyp[j - 1] = i;
            j -= 1;
        }
    }
    Alignment {
        hyp_matched,
        ref_matched,
        ref_to_hyp,
    }
}

/// Moves `h[start..start + len]` so that it begins before original index `dest`.
fn apply_shift<T: Clone>(h: &[T], start: usize, len: usize, dest: usize) -> Vec<T> {
    let block = &h[start..start + len];
    let mut rest: Vec<T> = h[..start].iter().chain(&h[start + len..]).cloned().collect();
    let at = if dest <= start { dest } else { dest - len };
    rest.splice(at..at, block.iter().cloned());
    rest
}

/// Returns `(shifts, remaining edits)` after greedy shifting.
fn shifted_edits<T: PartialEq + Clone>(hyp: &[T], reference: &[T]) -> (usize, usize) {
    let mut h = hyp.to_vec();
    let mut cost = word_edit_distance(&h, reference);
    let mut shifts = 0;
    while cost > 1 {
        let alignment = align(&h, reference);
        let mut best: Option<(usize, Vec<T>)> = None;
        for start in 0..h.len() {
            for len in 1..=MAX_SHIFT_SIZE.min(h.len() - start) {
                let block = &h[start..start + len];
                if alignment.hyp_matched[start..start + len].iter().all(|&m| m) {
                    continue;
                }
                for k in 0..reference.len().saturating_sub(len - 1) {
                    if &reference[k..k + len] != block
                        || alignment.ref_matched[k..k + len].iter().all(|&m| m)
                    {
                        continue;
                    }
                    let anchor = alignment.ref_to_hyp[k];
                    let after_prev = if k == 0 { 0 } else { alignment.ref_to_hyp[k - 1] + 1 };
                    for dest in [anchor, after_prev] {
                        if dest >= start && dest <= start + len {
                            continue;
                        }
                        if dest.abs_diff(start) > MAX_SHIFT_DISTANCE {
                            continue;
                        }
                        let moved = apply_shift(&h, start, len, dest.min(h.len()));
                        let new_cost = word_edit_distance(&moved, reference);
                        let improves = best.as_ref().is_none_or(|(c, _)| new_cost < *c);
                        if new_cost + 1 < cost && improves {
                            best = Some((new_cost, moved));
                        }
                    }
                }
            }
        }
        match best {
            Some((new_cost, moved)) => {
                h = moved;
                cost = new_cost;
                shifts += 1;
            }
            None => break,
        }
    }
    (shifts, cost)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{HashSet, VecDeque};

    fn score(h: &str, r: &str) -> f64 {
        ter(&h.into(), &r.into()).value
    }

    /// Exhaustive minimum of `shifts + edits` over all shift sequences up to `depth`.
    fn exhaustive(h: &[&str], r: &[&str], depth: usize) -> usize {
        let mut best = word_edit_distance(h, r);
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([(h.to_vec(), 0usize)]);
        while let Some((cur, shifts)) = queue.pop_front() {
            best = best.min(shifts + word_edit_distance(&cur, r));
            if shifts == depth || !seen.insert(cur.clone()) {
                continue;
            }
            for start in 0..cur.len() {
                for len in 1..=cur.len() - start {
                    for dest in 0..=cur.len() {
                        if dest >= start && dest <= start + len {
                            continue;
                        }
                        queue.push_back((apply_shift(&cur, start, len, dest), shifts + 1));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn identical_is_zero() {
        assert_eq!(score("a b c", "a b c"), 0.0);
    }

    #[test]
    fn block_swap_costs_one_shift() {
        assert_eq!(score("c d a b", "a b c d"), 0.25);
        assert_eq!(exhaustive(&["c", "d", "a", "b"], &["a", "b", "c", "d"], 2), 1);
    }

    #[test]
    fn single_substitution() {
        assert_eq!(score("w0 w1 w2 w3 XX w5 w6 w7 w8 w9", "w0 w1 w2 w3 w4 w5 w6 w7 w8 w9"), 0.1);
    }

    #[test]
    fn empty_reference_convention() {
        assert_eq!(score("a b", ""), 2.0);
        assert_eq!(score("", ""), 0.0);
        assert_eq!(score("", "a b"), 1.0);
    }

    #[test]
    fn apply_shift_moves_blocks_both_ways() {
        let h = ["a", "b", "c", "d", "e"];
        assert_eq!(apply_shift(&h, 3, 2, 0), ["d", "e", "a", "b", "c"]);
        assert_eq!(apply_shift(&h, 0, 2, 5), ["c", "d", "e", "a", "b"]);
        assert_eq!(apply_shift(&h, 0, 1, 3), ["b", "c", "a", "d", "e"]);
    }

    proptest! {
        #[test]
        fn never_worse_than_plain_edit_distance(h in "[abcd ]{0,30}", r in "[abcd ]{1,30}") {
            let (th, tr) = (TokenSequence::new(&h), TokenSequence::new(&r));
            prop_assume!(!tr.is_empty());
            let plain = word_edit_distance(th.tokens(), tr.tokens()) as f64 / tr.len() as f64;
            let v = ter(&th, &tr).value;
            prop_assert!(v >= 0.0);
            prop_assert!(v <= plain + 1e-12);
        }
    }
}
