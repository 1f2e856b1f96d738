//! Unit-cost edit distance over Unicode scalar values.
//!
//! Uses the block-based bit-vector recurrence of Myers and Hyyrö: each column
//! of the dynamic-programming table is encoded as vertical +1/-1 delta bit
//! vectors, so the cost is `O(⌈m/64⌉·n)` word operations.

use std::collections::HashMap;

use super::{MetricName, MetricValue};

pub fn levenshtein(a: &str, b: &str) -> MetricValue {
    MetricValue::new(MetricName::Levenshtein, levenshtein_distance(a, b) as f64)
}

pub fn levenshtein_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    // The shorter string becomes the pattern (the bit-vector rows).
    let (pattern, text) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
    bit_parallel(pattern, text)
}

fn bit_parallel(pattern: &[char], text: &[char]) -> usize {
    let m = pattern.len();
    if m == 0 {
        return text.len();
    }
    let blocks = m.div_ceil(64);

    let mut slot: HashMap<char, usize> = HashMap::new();
    let mut peq: Vec<u64> = Vec::new();
    for (i, &c) in pattern.iter().enumerate() {
        let base = *slot.entry(c).or_insert_with(|| {
            peq.extend(std::iter::repeat_n(0, blocks));
            peq.len() - blocks
        });
        peq[base + i / 64] |= 1 << (i % 64);
    }
    let zeros = vec![0u64; blocks];

    let mut pv = vec![!0u64; blocks];
    let mut mv = vec![0u64; blocks];
    let last_mask = 1u64 << ((m - 1) % 64);
    let mut score = m as isize;

    for c in text {
        let eq = match slot.get(c) {
            Some(&base) => &peq[base..base + blocks],
            None => &zeros[..],
        };
        // Row 0 of the table grows by one per column.
        let mut carry: i8 = 1;
        for b in 0..blocks {
            let mask = if b + 1 == blocks { last_mask } else { 1 << 63 };
            carry = advance_block(&mut pv[b], &mut mv[b], eq[b], carry, mask);
        }
        score += carry as isize;
    }
    score as usize
}

/// Advances one 64-row block by one column. `hin` is the horizontal delta
/// entering the top of the block; returns the delta leaving the row selected by `out_mask`.
#[inline]
fn advance_block(pv: &mut u64, mv: &mut u64, eq: u64, hin: i8, out_mask: u64) -> i8 {
    let hin_neg = (hin < 0) as u64;
    let hin_pos = (hin > 0) as u64;
    let xv = eq | *mv;
    let eq = eq | hin_neg;
    let xh = ((eq & *pv).wrapping_add(*pv) ^ *pv) | eq;
    let mut ph = *mv | !(xh | *pv);
    let mut mh = *pv & xh;
    let hout = if ph & out_mask != 0 {
        1
    } else if mh & out_mask != 0 {
        -1
    } else {
        0
    };
    ph = (ph << 1) | hin_pos;
    mh = (mh << 1) | hin_neg;
    *pv = mh | !(xv | ph);
    *mv = ph & xv;
    hout
}
