//! Slow reference implementations shared by the integration tests.
#![allow(dead_code)]

use lzdist::lz77::Phrase;
use rand::Rng;

/// Quadratic greedy LZ77 parse: at each position take the longest match
/// starting at any earlier position (overlap allowed), leftmost on ties.
pub fn naive_lz(s: &[u32]) -> Vec<Phrase> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let (mut best_len, mut best_src) = (0, 0);
        for j in 0..i {
            let mut l = 0;
            while i + l < s.len() && s[j + l] == s[i + l] {
                l += 1;
            }
            if l > best_len {
                best_len = l;
                best_src = j;
            }
        }
        if best_len == 0 {
            out.push(Phrase::Literal(s[i]));
            i += 1;
        } else {
            out.push(Phrase::Copy {
                source: best_src,
                len: best_len,
            });
            i += best_len;
        }
    }
    out
}

/// Full dynamic-programming table over Unicode scalars.
pub fn dp_levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut d = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for j in 0..=b.len() {
        d[0][j] = j;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            d[i][j] = (d[i - 1][j - 1] + usize::from(a[i - 1] != b[j - 1]))
                .min(d[i - 1][j] + 1)
                .min(d[i][j - 1] + 1);
        }
    }
    d[a.len()][b.len()]
}

/// Random string over the first `alphabet` lowercase letters.
pub fn random_string(rng: &mut impl Rng, len: usize, alphabet: u8) -> String {
    (0..len).map(|_| (b'a' + rng.random_range(0..alphabet)) as char).collect()
}
